from .canon import CanonicalForm, are_isomorphic, canonical_form, is_canonical
from .catalog import (
    CatalogEntry,
    CatalogError,
    IsoClassCatalog,
    catalog_read,
    catalog_write,
)
from .census import (
    DEFAULT_MAX_ORDER,
    FILTERS,
    Filter,
    OrderCapError,
    SearchConfig,
    default_worker_count,
    enumerate_classes,
)
from .kernel import BACKEND
from .masks import MASK_BITS, property_flags, property_mask

__all__ = [
    "BACKEND",
    "CanonicalForm",
    "CatalogEntry",
    "CatalogError",
    "DEFAULT_MAX_ORDER",
    "FILTERS",
    "Filter",
    "IsoClassCatalog",
    "MASK_BITS",
    "OrderCapError",
    "SearchConfig",
    "are_isomorphic",
    "canonical_form",
    "catalog_read",
    "catalog_write",
    "default_worker_count",
    "enumerate_classes",
    "is_canonical",
    "property_flags",
    "property_mask",
]
