from .gadget_graph import EdgePart, GadgetBlock, GadgetGraph, GStarStar, build_gstar, build_gstarstar
from .p_gadgets import (
    GADGET_KINDS,
    Gadget,
    GadgetFactory,
    GadgetKind,
    GadgetReport,
    GadgetSpec,
    P4Reading,
    PropertyCheck,
    custom_gadget,
    gadget_factory,
    gadget_size,
    make_gadget,
    verify_p_properties,
)
