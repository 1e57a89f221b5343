import io
import json
from pathlib import Path

import pytest

from pycops import solve
from pycops.errors import ClaimNotFoundError, InvalidParameterError
from pycops.game import GameConfig
from pycops.graphs import (
    capture_family,
    complete,
    cycle,
    path,
    petersen,
    random_tree,
    sequence_realizer,
    write_graph6,
)
from pycops.harness import (
    CSV_COLUMNS,
    REGISTRY,
    ClaimKind,
    ClaimRecord,
    ClaimStatus,
    HarnessSettings,
    SolveCache,
    exit_code,
    explore_monotone,
    get_claim,
    list_claims,
    report_emit,
    run_all,
    run_claim,
    scan_graph6,
)
from pycops.harness._claims import claim

from .helpers import get_settings, speed, write_catalog


def get_records():
    """Gets one holding and one skipped record, as written by a run"""
    return [
        ClaimRecord(
            "capture_family_partition",
            ClaimKind.THEOREM,
            ClaimStatus.HOLDS,
            "the cop-win partition of G_n^2 gives n - 7",
            computed={"checked": 52},
            millis=12,
        ),
        ClaimRecord(
            "capt2_star_10",
            ClaimKind.SKIPPED,
            ClaimStatus.SKIPPED,
            "max speed-2 capture time over order-10 cop-win graphs = 3",
        ),
    ]


def test_settings_default_to_the_user_cache():
    settings = HarnessSettings.from_env({})
    assert settings.cache_dir == Path("~/.cache/pycops").expanduser()
    assert settings.catalog_dir is None
    assert settings.workers == 1
    assert not settings.include_stretch


def test_settings_read_the_environment(tmp_path):
    environ = {
        "PURSUIT_CACHE_DIR": str(tmp_path / "cache"),
        "PURSUIT_CATALOG_DIR": str(tmp_path),
        "PURSUIT_STATE_BUDGET": "1000",
    }
    settings = HarnessSettings.from_env(environ, workers=2)
    assert settings.cache_dir == tmp_path / "cache"
    assert settings.catalog_dir == tmp_path
    assert settings.state_budget == 1000
    assert settings.workers == 2


def test_settings_reject_bad_values():
    with pytest.raises(InvalidParameterError):
        HarnessSettings.from_env({"PURSUIT_STATE_BUDGET": "lots"})
    with pytest.raises(InvalidParameterError):
        HarnessSettings(workers=0)
    with pytest.raises(InvalidParameterError):
        HarnessSettings(state_budget=0)


def test_catalog_path_needs_the_file(tmp_path):
    settings = get_settings(catalog_dir=tmp_path)
    assert settings.catalog_path(7) is None
    write_catalog(tmp_path, 7, [path(7)])
    assert settings.catalog_path(7) == tmp_path / "connected7.g6"
    assert get_settings().catalog_path(7) is None


def test_cache_keeps_results_between_runs(tmp_path):
    cache = SolveCache(tmp_path)
    assert len(cache) == 0
    result = cache.solve(petersen(), speed(1, 3))
    assert cache.get(petersen(), speed(1, 3)) == result
    assert cache.get(petersen(), speed(1, 2)) is None
    again = SolveCache(tmp_path)
    assert len(again) == 1
    assert again.get(petersen(), speed(1, 3)) == result
    assert again.solve(petersen(), speed(1, 3)) == result
    assert len(again) == 1


def test_cache_ignores_unreadable_lines(tmp_path):
    cache = SolveCache(tmp_path)
    cache.put(solve(path(4), GameConfig()))
    with cache.path.open("a") as f:
        f.write("not json\n\n{\"key\": 1}\n")
    assert len(SolveCache(tmp_path)) == 1
    assert list(SolveCache(tmp_path))[0].capture_time == 2


def test_can_find_claims():
    assert get_claim("capture_family_partition").kind is ClaimKind.THEOREM
    ids = [c.claim_id for c in list_claims(pattern="capture_family_*")]
    assert ids == [
        "capture_family_partition",
        "capture_family_solver",
        "capture_family_unique_corner",
    ]
    skipped = list_claims(kinds=[ClaimKind.SKIPPED])
    assert "capt2_star_10" in [c.claim_id for c in skipped]
    assert all(c.check is None for c in skipped)
    with pytest.raises(ClaimNotFoundError):
        get_claim("nope")
    assert get_claim("subdivision_sandwich").parameters["s"] == [2, 3]


def test_claims_cannot_be_registered_twice():
    size = len(REGISTRY)
    with pytest.raises(InvalidParameterError):
        claim("capture_family_partition", ClaimKind.THEOREM, "again", "again")(lambda ctx: None)
    assert len(REGISTRY) == size


def test_missing_claim_is_an_error():
    with pytest.raises(ClaimNotFoundError):
        run_claim("nope", get_settings())
    with pytest.raises(KeyError):
        run_claim("nope", get_settings())


def test_out_of_reach_claims_are_skipped():
    record = run_claim("capt2_star_10", get_settings())
    assert record.status is ClaimStatus.SKIPPED
    assert record.note.startswith("not reproducible at desk scale: ")
    assert not record.budget_exceeded
    record = run_claim("torus_evidence_speed2_large", get_settings())
    assert record.status is ClaimStatus.SKIPPED
    assert record.note == "stretch claim, not included"
    record = run_claim("gavenciak_capture_time", get_settings())
    assert record.status is ClaimStatus.SKIPPED
    assert record.note == "no connected7.g6 catalog found"


def test_can_check_capture_family_partition():
    record = run_claim("capture_family_partition", get_settings())
    assert record.status is ClaimStatus.HOLDS
    assert record.computed == {"checked": 52}
    assert not record.failed


def test_claims_solve_through_the_cache(tmp_path):
    record = run_claim("maamoun_meyniel_trees", get_settings(tmp_path))
    assert record.status is ClaimStatus.HOLDS
    assert record.computed == {"P3□P3": 2, "P3□P3□P3": 2}
    assert len(SolveCache(tmp_path)) == 4


def test_claims_over_budget_are_skipped():
    record = run_claim("maamoun_meyniel_trees", get_settings(state_budget=10))
    assert record.status is ClaimStatus.SKIPPED
    assert record.budget_exceeded
    assert exit_code([record]) == 2


def test_can_check_a_catalog_claim(tmp_path):
    write_catalog(tmp_path, 9, [capture_family(9), path(9)])
    record = run_claim("capt2_star_9", get_settings(catalog_dir=tmp_path))
    assert record.status is ClaimStatus.HOLDS
    assert record.computed["max_capture_time"] == 2
    assert record.computed["graphs"] == 2
    assert record.computed["mismatches"] == []


def test_can_run_every_skipped_claim():
    records = run_all(kinds=[ClaimKind.SKIPPED], settings=get_settings())
    assert len(records) >= 4
    assert all(r.status is ClaimStatus.SKIPPED for r in records)
    assert exit_code(records) == 0


def test_exit_code_ranks_failures_over_budget():
    holds, skipped = get_records()
    failing = ClaimRecord("x", ClaimKind.THEOREM, ClaimStatus.FAILS, "x")
    counterexample = ClaimRecord("y", ClaimKind.CONJECTURE, ClaimStatus.FAILS, "y")
    over = ClaimRecord("z", ClaimKind.THEOREM, ClaimStatus.SKIPPED, "z", budget_exceeded=True)
    assert exit_code([holds, skipped]) == 0
    assert exit_code([holds, counterexample]) == 0
    assert exit_code([over, holds]) == 2
    assert exit_code([over, failing]) == 1
    assert failing.failed
    assert not counterexample.failed


def test_can_write_json_report(tmp_path):
    target = tmp_path / "report.json"
    text = report_emit(get_records(), "json", target)
    assert text.endswith("\n")
    assert target.read_text() == text
    data = json.loads(text)
    assert [d["claim_id"] for d in data] == ["capture_family_partition", "capt2_star_10"]
    assert data[0]["status"] == "holds"
    assert data[1]["status"] == "skipped(budget)"
    assert data[1]["computed"] is None


def test_can_write_csv_report(snapshot):
    text = report_emit(get_records(), "csv")
    assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
    snapshot.assert_match(text, "report.csv")


def test_unknown_report_format_is_rejected():
    with pytest.raises(InvalidParameterError):
        report_emit(get_records(), "yaml")


def test_can_scan_a_catalog():
    stream = io.StringIO("Bg\nBw\n\nB?\nB\n")
    report = scan_graph6(stream, 1, 3)
    assert report.graphs == 4
    assert report.malformed == 1
    assert report.disconnected == 1
    assert report.cop_win == 2
    assert report.max_capture_time == 1
    assert report.witnesses == ["Bg", "Bw"]
    assert report.spot_checks == 1
    assert report.mismatches == []


def test_scan_counts_records_of_the_wrong_order():
    report = scan_graph6(["A_", "Bg"], 1, 3)
    assert report.malformed == 1
    assert report.cop_win == 1
    assert report.to_dict()["order"] == 3


def test_scan_finds_the_capture_family_at_speed_two():
    stream = io.StringIO(write_graph6(capture_family(9)) + "\n" + write_graph6(cycle(9)) + "\n")
    report = scan_graph6(stream, 2, 9, spot_check_every=1)
    assert report.graphs == 2
    assert report.cop_win == 1
    assert report.max_capture_time == 2
    assert report.witnesses == [write_graph6(capture_family(9))]
    assert report.spot_checks == 1


def test_scan_checks_its_parameters():
    with pytest.raises(InvalidParameterError):
        scan_graph6([], 0)
    with pytest.raises(InvalidParameterError):
        scan_graph6([], 1, spot_check_every=0)


def test_explores_speeds_up_to_the_radius():
    report = explore_monotone(petersen(), 5)
    assert report.sequence == [3, 1]
    assert report.radius == 2
    assert report.monotone
    assert explore_monotone(complete(1), 3).sequence == [1]


def test_trees_need_one_cop_at_every_speed():
    for seed in range(3):
        report = explore_monotone(random_tree(8, seed=seed), 3)
        assert set(report.sequence) == {1}
        assert report.increases == []


def test_explorer_uses_the_given_solver(tmp_path):
    cache = SolveCache(tmp_path)
    report = explore_monotone(sequence_realizer([2, 1]), 2, solver=cache.solve)
    assert report.to_dict()["monotone"] == report.monotone
    assert len(cache) > 0
