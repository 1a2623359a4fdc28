# /src/tools/enumeration/conjectures.py

import logging

from ..base import BaseTool
from core.enumeration import read_catalog
from schemas.index import ConjecturesInput, ConjecturesOutput

logger = logging.getLogger(__name__)


class ConjecturesTool(BaseTool[ConjecturesInput, ConjecturesOutput]):
    """Check the published deficiency constants within the given bounds."""

    input_class = ConjecturesInput

    def run(self, payload: ConjecturesInput) -> ConjecturesOutput:
        catalogs = [read_catalog(path) for path in payload.catalog_paths]
        for path, catalog in zip(payload.catalog_paths, catalogs):
            logger.info("using supplied catalog %s (%d entries)", path, len(catalog.entries))
        report = self.context.constants.check_constants(
            n_max_d1=payload.n_max_d1,
            n_max_d2=payload.n_max_d2,
            n_max_d3=payload.n_max_d3,
            n_max_uhit=payload.n_max_uhit,
            k=payload.k,
            catalogs=catalogs,
        )
        return ConjecturesOutput(report=report, failed=report.failed)
