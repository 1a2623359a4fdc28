# /src/tools/enumeration/enumerate.py

from ..base import BaseTool
from core.enumeration import write_catalog
from schemas.index import EnumerateInput, EnumerateOutput


class EnumerateTool(BaseTool[EnumerateInput, EnumerateOutput]):
    """Enumerate one catalog and optionally persist it as JSON lines."""

    input_class = EnumerateInput

    def run(self, payload: EnumerateInput) -> EnumerateOutput:
        catalog = self.context.enumerator.enumerate(payload.spec)
        if payload.out:
            write_catalog(catalog, payload.out)
        return EnumerateOutput(
            header=catalog.header,
            counts={cell.n: cell.count for cell in catalog.header.cells},
            entries=len(catalog.entries),
            out=payload.out,
        )
