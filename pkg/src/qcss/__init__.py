"""Self-orthogonal binary codes, algebraic decoders, and CSS quantum code tooling."""

from .bch import (
    BchDecoder,
    CyclicCodeSpec,
    Gf2mField,
    bch_generator,
    bm_decode,
    dual_zero_set,
    is_self_orthogonal_cyclic,
    minimal_polynomial,
    search_self_orthogonal_bch,
)
from .channel import ChannelSpec, TrialReport, monte_carlo, sample_error
from .codes import LinearCode, WeightEnumerator, macwilliams
from .constructions import (
    ConstructionReport,
    augment,
    concatenate,
    construction_x,
    construction_x3,
    construction_x4,
    construction_y1,
    construction_y4,
    extend_parity_dual,
    nebe,
    plotkin,
    product,
    shorten,
    triple_sum,
)
from .css import (
    CssCode,
    PauliError,
    Syndrome,
    symplectic_dot,
)
from .gf2 import BitMatrix, BitVector, dot, nullspace_basis, rref
from .projgeom import (
    Configuration,
    ProjGeometry,
    RudolphDecoder,
    build_so_code,
    config_params,
    enumerate_spaces,
    rudolph_decode,
)
from .reedmuller import ReedDecoder, RmCode, reed_decode, rm_generator

__all__ = [
    "BchDecoder",
    "BitMatrix",
    "BitVector",
    "ChannelSpec",
    "Configuration",
    "ConstructionReport",
    "CssCode",
    "CyclicCodeSpec",
    "Gf2mField",
    "LinearCode",
    "PauliError",
    "ProjGeometry",
    "ReedDecoder",
    "RmCode",
    "RudolphDecoder",
    "Syndrome",
    "TrialReport",
    "WeightEnumerator",
    "augment",
    "bch_generator",
    "bm_decode",
    "build_so_code",
    "concatenate",
    "config_params",
    "construction_x",
    "construction_x3",
    "construction_x4",
    "construction_y1",
    "construction_y4",
    "dot",
    "dual_zero_set",
    "enumerate_spaces",
    "extend_parity_dual",
    "is_self_orthogonal_cyclic",
    "macwilliams",
    "minimal_polynomial",
    "monte_carlo",
    "nebe",
    "nullspace_basis",
    "plotkin",
    "product",
    "reed_decode",
    "rm_generator",
    "rref",
    "rudolph_decode",
    "sample_error",
    "search_self_orthogonal_bch",
    "shorten",
    "symplectic_dot",
    "triple_sum",
]
