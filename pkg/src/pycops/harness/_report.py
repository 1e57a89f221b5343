import csv
import io
import json
from pathlib import Path
from typing import Iterable, Optional, Union

from ..errors import InvalidParameterError

CSV_COLUMNS = ("claim_id", "status", "expected", "computed", "millis")
"""The columns of a CSV claim report, in order."""


def records_to_json(records: Iterable) -> str:
    """Write claim records as a JSON array, one object per record."""
    return json.dumps([record.to_dict() for record in records], indent=2, sort_keys=True)


def records_to_csv(records: Iterable) -> str:
    """Write claim records as CSV with the columns of :data:`CSV_COLUMNS`."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in records:
        writer.writerow(record.csv_row())
    return out.getvalue()


def report_emit(
    records: Iterable, fmt: str = "json", path: Optional[Union[str, Path]] = None
) -> str:
    """Render claim records and optionally write them to a file.

    Args:
        records: The claim records
        fmt: ``"json"`` or ``"csv"``
        path: Where to write the report, if anywhere

    Returns:
        str: The report text

    Raises:
        InvalidParameterError: If the format is unknown
        OSError: If the file cannot be written; the message names the path
    """
    if fmt == "json":
        text = records_to_json(records) + "\n"
    elif fmt == "csv":
        text = records_to_csv(records)
    else:
        raise InvalidParameterError("Unknown report format %r, expected json or csv" % fmt)
    if path is not None:
        path = Path(path)
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise OSError("Cannot write the report %s: %s" % (path, e)) from e
    return text
