"""Submodule for checking claims at desk scale: the registry, the monotone explorer, catalog scans, the cache and reports."""

from ._cache import SolveCache
from ._claims import (
    REGISTRY,
    Claim,
    ClaimContext,
    ClaimKind,
    ClaimRecord,
    ClaimStatus,
    Outcome,
    exit_code,
    get_claim,
    list_claims,
    run_all,
    run_claim,
)
from ._explore import MonotoneReport, explore_monotone
from ._report import CSV_COLUMNS, records_to_csv, records_to_json, report_emit
from ._scan import ScanReport, scan_graph6
from ._settings import (
    CACHE_DIR_VARIABLE,
    CATALOG_DIR_VARIABLE,
    DEFAULT_CACHE_DIR,
    STATE_BUDGET_VARIABLE,
    HarnessSettings,
)

__all__ = [
    "CACHE_DIR_VARIABLE",
    "CATALOG_DIR_VARIABLE",
    "CSV_COLUMNS",
    "DEFAULT_CACHE_DIR",
    "REGISTRY",
    "STATE_BUDGET_VARIABLE",
    "Claim",
    "ClaimContext",
    "ClaimKind",
    "ClaimRecord",
    "ClaimStatus",
    "HarnessSettings",
    "MonotoneReport",
    "Outcome",
    "ScanReport",
    "SolveCache",
    "exit_code",
    "explore_monotone",
    "get_claim",
    "list_claims",
    "records_to_csv",
    "records_to_json",
    "report_emit",
    "run_all",
    "run_claim",
    "scan_graph6",
]
