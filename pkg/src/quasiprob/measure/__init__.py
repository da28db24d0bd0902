from .extension import PartitionMeasure, extend
from .quasi import MAX_INDEPENDENCE_EVENTS, QuasiMeasure, normalize, validate
from .space import Event, WorldSpace

__all__ = [
    "MAX_INDEPENDENCE_EVENTS",
    "Event",
    "PartitionMeasure",
    "QuasiMeasure",
    "WorldSpace",
    "extend",
    "normalize",
    "validate",
]
