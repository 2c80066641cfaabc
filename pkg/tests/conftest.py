import sympy
from hypothesis import strategies as st

from laurent_module.laurent_poly import LaurentPoly


def x(i, arity, power=1):
    """x_(i+1) ** power as a LaurentPoly."""
    return LaurentPoly.variable(i, arity, power)


def poly(arity, terms):
    return LaurentPoly(arity, terms)


def sympy_equal(p, expr, symbols):
    return sympy.simplify(p.to_sympy(symbols) - expr) == 0


def laurent_polys(arity=2, max_terms=4, max_exp=2, max_coeff=3):
    exponents = st.tuples(*[st.integers(-max_exp, max_exp)] * arity)
    coeffs = st.integers(-max_coeff, max_coeff).filter(bool)
    return st.dictionaries(exponents, coeffs, max_size=max_terms).map(
        lambda terms: LaurentPoly(arity, terms)
    )


def nonzero_laurent_polys(arity=2, **kwargs):
    return laurent_polys(arity, **kwargs).filter(lambda p: not p.is_zero())
