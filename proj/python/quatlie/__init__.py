"""Quaternion-type Lie algebras in complexified Clifford algebras.

Thin Python layer over the C++ core: exact multivector arithmetic, the
sixteen-row group/algebra catalog, canonical generator matrices, the
classification lookup, and the verification sweep.
"""

try:
    from ._quatlie import *  # noqa: F401,F403
    from ._quatlie import __doc__ as _core_doc  # noqa: F401
except ImportError:  # in-tree builds put the extension next to the package
    from _quatlie import *  # noqa: F401,F403

__version__ = "0.1.0"

__all__ = [
    "Signature",
    "Multivector",
    "commutator",
    "even_iso",
    "swap_iso",
    "quat_type_dims",
    "lie_algebra_dim",
    "algebra_name",
    "algebra_id",
    "subspace_basis",
    "closure_check",
    "commutation_table_check",
    "spin_checks",
    "build_beta",
    "representation_json",
    "additional_signature",
    "classify",
    "derived_iso_chain",
    "verify",
    "sweep",
]
