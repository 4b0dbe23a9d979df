"""Registered families of laws with their stated invariants, and the harness that checks them."""
from .families import CatalogError
from .registry import (
    DEGENERATIONS,
    CatalogEntry,
    Claim,
    Degeneration,
    FWitness,
    Param,
    build,
    entries,
    expected_profile,
    f_witnesses,
    get,
    names,
)
from .verify import Check, Report, verify
