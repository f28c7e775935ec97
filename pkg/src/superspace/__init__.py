"""Superspace Vandermondes, ordered set superpartitions and their graded characters."""

from .core import (Permutation, SuperMonomial, SuperPolynomial, act, derive, format_poly,
                   initial_term, odot, parse_poly, young_symmetrize)
from .osp import (OrderedSetSuperpartition, code, codinv, coinv, count_osp, decode, enumerate_osp,
                  format_osp, is_substaircase, parse_osp, reading_word_ides, substaircase)
from .qpoly import QPolynomial, parse_qpoly, qbinom, qfactorial, qint
from .series import (BigradedTable, cd_function, grfrob, hilbert, hook_expansion, skewing_lhs,
                     skewing_rhs)
from .symfunc import (QSymVector, SymFuncVector, basis_operator, frobenius_from_character,
                      fundamental_to_schur, parse_symfunc, poly_to_schur)
from .vandermonde import (coinvariant_slice_quotients, delta, harmonic_basis, ideal_generators,
                          involution)
from .verify import verify
from .words import Letter, format_word, parse_word

__version__ = "0.1.0"
