# /src/core/enumeration/catalog_io.py

"""JSON-lines persistence: a header line followed by one entry per line."""

import json
import logging
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from schemas.enumeration import Catalog, CatalogEntry, CatalogHeader
from ..cnf.clause_set import ClauseSet
from ..errors import CatalogFormatError

logger = logging.getLogger(__name__)


def dump_catalog(catalog: Catalog) -> str:
    lines = [catalog.header.model_dump_json()]
    lines.extend(entry.model_dump_json() for entry in catalog.entries)
    return "\n".join(lines) + "\n"


def load_catalog(text: str) -> Catalog:
    """
    Parse a JSON-lines catalog.

    Args:
        text: Header line, then entry lines; blank lines are ignored

    Returns:
        The catalog

    Raises:
        CatalogFormatError: On invalid JSON, a missing header or a bad record
    """
    header: Optional[CatalogHeader] = None
    entries: List[CatalogEntry] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise CatalogFormatError(f"invalid JSON: {e.msg}", lineno) from e
        kind = record.get("kind") if isinstance(record, dict) else None
        try:
            if kind == "header":
                if header is not None:
                    raise CatalogFormatError("second header", lineno)
                header = CatalogHeader.model_validate(record)
            elif kind == "entry":
                if header is None:
                    raise CatalogFormatError("entry before header", lineno)
                entry = CatalogEntry.model_validate(record)
                try:
                    ClauseSet(entry.clauses)
                except ValueError as e:
                    raise CatalogFormatError(str(e), lineno) from e
                entries.append(entry)
            else:
                raise CatalogFormatError(f"unknown record kind {kind!r}", lineno)
        except ValidationError as e:
            raise CatalogFormatError(str(e), lineno) from e
    if header is None:
        raise CatalogFormatError("missing header line")
    return Catalog(header=header, entries=entries)


def write_catalog(catalog: Catalog, path: Union[str, Path]) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_catalog(catalog), encoding="utf-8")
    logger.info("wrote %d entries to %s", len(catalog.entries), path)


def read_catalog(path: Union[str, Path]) -> Catalog:
    return load_catalog(Path(path).read_text(encoding="utf-8"))
