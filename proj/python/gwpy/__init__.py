"""Generalised wreath products of permutation groups over finite posets."""

from ._gwp import (
    BudgetExhausted,
    Element,
    Group,
    GuardError,
    InputError,
    Poset,
    axiom_suite,
    certify,
    decompose,
    desk_corpus,
    lemma_suite,
    load_instance,
    minimal_generators,
    oracle_d,
    parse_instance,
    shape_instance,
)

__all__ = [
    "BudgetExhausted",
    "Element",
    "Group",
    "GuardError",
    "InputError",
    "Poset",
    "axiom_suite",
    "certify",
    "decompose",
    "desk_corpus",
    "lemma_suite",
    "load_instance",
    "minimal_generators",
    "oracle_d",
    "parse_instance",
    "shape_instance",
]
