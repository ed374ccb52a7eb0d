"""Reading ordinates from sample files."""

import csv
from pathlib import Path
from typing import List, Optional, Union

from ..utils.exceptions import EmptySamplesError, SampleFileError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


def read_samples(path: Union[str, Path], column: Optional[int] = None) -> List[float]:
    """Read one ordinate per line from a UTF-8 text or CSV file.

    Blank lines and lines starting with '#' are skipped. Comma-separated
    lines contribute the value in ``column`` (0-based, default 0). In a
    comma-separated file a first row that does not parse as a number is
    taken as a header; plain files have no header.

    Args:
        path: Sample file
        column: CSV column to read

    Returns:
        Ordinates in file order

    Raises:
        SampleFileError: Unreadable file or malformed line
        EmptySamplesError: No samples in the file
    """
    path = Path(path)
    column = 0 if column is None else column
    if column < 0:
        raise SampleFileError(path=path, line=0, detail=f"column must be non-negative, got {column}")

    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise SampleFileError(path=path, line=0, detail=str(exc)) from exc

    values: List[float] = []
    seen_row = False
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue

        fields = [field.strip() for field in next(csv.reader([text]))]
        if column >= len(fields):
            raise SampleFileError(path=path, line=number, detail=f"no column {column}")

        try:
            values.append(float(fields[column]))
        except ValueError:
            if not seen_row and len(fields) > 1:
                logger.debug("skipping header row", path=str(path), line=number)
                seen_row = True
                continue
            raise SampleFileError(path=path, line=number, detail=f"not a number: {fields[column]!r}") from None
        seen_row = True

    if not values:
        raise EmptySamplesError(path=path)

    logger.debug("read samples", path=str(path), count=len(values))
    return values
