from .fin_set import (
    FinSet, PortList, TupleValue, BULLET, render_ports, tuple_count,
    enumerate_tuples, tuple_index, check_tuple, format_tuple,
)
from .fin_fun import (
    FinFun, StructuralFuns, enumerate_functions, compose_fun,
    identity_fun, copy_fun, delete_fun, projection_fun, permutation_fun,
    check_permutation, product_fun, structural_funs,
)

__all__ = [
    "FinSet", "PortList", "TupleValue", "BULLET", "render_ports", "tuple_count",
    "enumerate_tuples", "tuple_index", "check_tuple", "format_tuple",
    "FinFun", "StructuralFuns", "enumerate_functions", "compose_fun",
    "identity_fun", "copy_fun", "delete_fun", "projection_fun", "permutation_fun",
    "check_permutation", "product_fun", "structural_funs",
]
