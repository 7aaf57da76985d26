"""Exact expansions of q-chromatic symmetric functions of unit interval
graphs into modified Macdonald, elementary and Hall-Littlewood bases, with
brute-force and operator oracles validating every coefficient."""

from .exact import (BiPoly, DEFAULT_SEED, FactoredRatio, RatFunc, q_fact,
                    q_int, pochhammer_qq, pochhammer_qq_single, seeded_primes,
                    sum_factored)
from .interval import (DyckWord, Hessenberg, dyck_ascii, e_sum,
                       enumerate_hessenberg, from_dyck)
from .macdonald import (MacdonaldCache, hall_littlewood_P, hall_littlewood_Q,
                        hall_littlewood_Q_inv_q, htilde, htilde_at_minus_one,
                        pieri_d)
from .partitions import (Cell, Partition, addable_cells, arm, cell_monomial,
                         conjugate, is_horizontal_strip, leg, n_stat,
                         partitions_of)
from .symfunc import SymFunc
from .tableaux import (StripSequence, StripTableau, columns,
                       enumerate_strip_tableaux, has_column_support, hl_stats,
                       m_stat, strip_sequence)
from .expansion import (EExpansion, HallLittlewoodExpansion, HikitaCoeff,
                        SegmentData, admissible_colorings, cell_weight,
                        cell_weight_q1, cell_weight_t0, chi_from_e_expansion,
                        e_expansion, e_expansion_q1, hikita_coeff,
                        hl_expansion, macdonald_coeff, macdonald_expansion,
                        segment_data, tableau_weight)
from .oracles import (VkElement, chromatic_brute, chromatic_via_operators,
                      d_minus, d_plus, dyck_operator_series, hecke_T)

__version__ = "0.1.0"
