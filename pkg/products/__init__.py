"""Tensor products of presented algebras and the product statements they satisfy."""

from products.kunneth import (
    algebra_certificate,
    kunneth_check,
    transported_idempotent,
    transported_nilpotent,
)
from products.tensor import (
    MergedParamSystem,
    TensorProduct,
    ideal_as_tensor,
    merge_systems,
    tensor,
    tensor_product,
)

__all__ = [
    "MergedParamSystem",
    "TensorProduct",
    "algebra_certificate",
    "ideal_as_tensor",
    "kunneth_check",
    "merge_systems",
    "tensor",
    "tensor_product",
    "transported_idempotent",
    "transported_nilpotent",
]
