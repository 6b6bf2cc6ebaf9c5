from typing import Any

import numpy as np
import numpy.typing as npt


type FloatArray = npt.NDArray[np.float64]
type IntArray = npt.NDArray[np.intp]
type ArrayLike = npt.ArrayLike


def is_typevar[T: Any](t: T) -> bool:
    return hasattr(t, "__bound__") or hasattr(t, "__constraints__")
