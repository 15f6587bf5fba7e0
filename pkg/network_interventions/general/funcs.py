"""
Generic Python functions
"""
import dataclasses
import math

import numpy as np


def parse_sweep(string):
    """ Parses a budget sweep "start:stop:step" into its budgets.
    Sample:
        - Input: '0:1:0.25'
        - Output: [0.0, 0.25, 0.5, 0.75, 1.0]
    Args:
        string (str): The sweep, stop inclusive
    Returns: The list of budgets; empty when stop < start
    """
    parts = string.split(':')
    if len(parts) != 3:
        raise ValueError(f'A sweep must look like start:stop:step, got {string!r}')
    start, stop, step = (float(p) for p in parts)
    if not step > 0:
        raise ValueError(f'The sweep step must be positive, got {step}')
    if stop < start:
        return []
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # Budgets are computed from the index so that they do not accumulate rounding
    return [round(start + k * step, 12) for k in range(count)]


def upper_triangle(matrix):
    """ Flattens the entries above the diagonal in row-major order
    Args:
        matrix (array-like): A square matrix
    Returns: The list of entries m[i][j], i < j
    """
    matrix = np.asarray(matrix, dtype=float)
    return matrix[np.triu_indices(matrix.shape[0], k=1)].tolist()


def to_jsonable(obj):
    """ Converts dataclasses, numpy arrays and numpy scalars to plain Python values for json.dump
    Args:
        obj: The object to convert
    Returns: The converted object
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    return obj
