"""Finite groupoids, covering morphisms, homotopies of functors and categorical groups."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Groupoid,
    ProductGroupoid,
    Subgroup,
    build_groupoid,
    codiscrete,
    disjoint_union,
    group_as_groupoid,
    interval_groupoid,
    product,
    validate_groupoid,
)
from .functors import (  # noqa: E402
    GroupoidMorphism,
    Verdict,
    compose_functors,
    constant_functor,
    identity_functor,
    induced_partial,
    induced_partial_right,
    injection_left,
    injection_right,
    is_isomorphism,
    validate_functor,
)
from .covering import (  # noqa: E402
    CoveringMorphism,
    characteristic_group,
    check_covering,
    factor_covering,
    is_universal_covering,
    lift_morphism,
    subgroup_cover,
    universal_cover,
)
from .homotopy import (  # noqa: E402
    HomotopyFunctor,
    NaturalIsomorphism,
    are_homotopic,
    homotopy_to_nat_iso,
    lift_homotopy,
    nat_iso_to_homotopy,
    validate_nat_iso,
)
from .catgroup import (  # noqa: E402
    CatGroupStructure,
    is_catgroup_morphism,
    lift_categorical_group,
    validate_categorical_group,
    validate_group_groupoid,
)
