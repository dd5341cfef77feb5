"""Decategorified invariants of twisted graded categories, computed exactly."""

from .braidchar import (CharacterTable, braiding_character, character_to_series_row,
                        induced_character_value)
from .chromatic import (StemGroup, bz2_cardinality, chromatic_character, chromatic_decision,
                        integral_bz2_sq, loop_bz2_integral, no_truncated_unit_check,
                        transchromatic_table, truncated_units)
from .coeffring import (Laurent, SignedUnitValue, TruncatedSeries, series_invert, series_mul,
                        signed_unit_eval)
from .errors import EnumerationLimitError, IntegralityError, InversionError, RingMismatchError
from .extalg import ext_dim, ext_series, ext_series_product, verify_sym_ext_identity
from .graded import (FiniteAbelianGroup, GradedDim, Twist, TwistKind, count_twists,
                     day_convolve, dim_shift, is_invertible)
from .symgroup import (Partition, centralizer_order, class_size, cycle_counts,
                       cyclic_loop_components, num_cycles, partitions)

__version__ = "0.1.0"
