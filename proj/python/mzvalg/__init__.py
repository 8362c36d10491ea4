"""Exact word algebra for multiple zeta values, strict and non-strict.

The heavy lifting happens in the compiled ``_core`` extension; this package
re-exports its public surface.  Quick tour::

    >>> import mzvalg as mz
    >>> str(mz.product("h", mz.z(2), mz.z(3)))
    'z(5) + z(3,2) + z(2,3)'
    >>> mz.verify("nhoffman", [2, 1])["pass"]
    True
"""

from ._core import (
    AlgebraError,
    ParseError,
    Poly,
    apply_map,
    decompose,
    eval_mzv,
    eval_nmzv,
    eval_nonstrict,
    eval_regularized,
    eval_strict,
    product,
    recompose,
    relation,
    verify,
    word,
    z,
)

__all__ = [
    "AlgebraError",
    "ParseError",
    "Poly",
    "apply_map",
    "decompose",
    "eval_mzv",
    "eval_nmzv",
    "eval_nonstrict",
    "eval_regularized",
    "eval_strict",
    "product",
    "recompose",
    "relation",
    "verify",
    "word",
    "z",
]

__version__ = "0.1.0"
