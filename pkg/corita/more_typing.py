import sys
from fractions import Fraction
from typing import Tuple, Union

if sys.version_info >= (3, 8, 0):
    from typing import Literal
else:
    from typing_extensions import Literal  # type: ignore


# a field element: Fraction over Q, int residue over F_p
Scalar = Union[Fraction, int]
Vector = Tuple[Scalar, ...]

Side = Literal['left', 'right']
Linearity = Literal['left', 'right', 'bi', 'k']
Sidedness = Literal['left', 'right', 'two-sided']
Verdict = Literal['pass', 'fail', 'hypotheses-unmet', 'info']
