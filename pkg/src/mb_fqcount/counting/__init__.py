"""Counting subsystem: enumeration oracle, closed forms, and the dispatcher that chooses between them."""

from mb_fqcount.counting.dispatch import FormulaPlan as FormulaPlan
from mb_fqcount.counting.dispatch import MethodChoice as MethodChoice
from mb_fqcount.counting.dispatch import count as count
from mb_fqcount.counting.dispatch import plan_formula as plan_formula
from mb_fqcount.counting.formulas import elementary_symmetric as elementary_symmetric
from mb_fqcount.counting.formulas import formula_baoulina as formula_baoulina
from mb_fqcount.counting.formulas import formula_carlitz_restricted as formula_carlitz_restricted
from mb_fqcount.counting.formulas import formula_cor1 as formula_cor1
from mb_fqcount.counting.formulas import formula_quasihomog as formula_quasihomog
from mb_fqcount.counting.formulas import formula_thm1 as formula_thm1
from mb_fqcount.counting.formulas import formula_thm2 as formula_thm2
from mb_fqcount.counting.formulas import formula_thm3 as formula_thm3
from mb_fqcount.counting.formulas import formula_thm4 as formula_thm4
from mb_fqcount.counting.oracle import brute_count as brute_count
from mb_fqcount.counting.oracle import count_solutions as count_solutions
from mb_fqcount.counting.oracle import count_zeros as count_zeros
from mb_fqcount.counting.oracle import equation_forms as equation_forms
