from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Tuple

from ..core.enums import Energy, Source
from ..core.errors import ValidationError
from ..geometry import Hypersphere
from ..logging import get_logger
from .routes import QuadraticFormPoly, printed_fixture, q4_form, q4es_form, qhat_form

logger = get_logger(__name__)

FormBuilder = Callable[[Hypersphere, Fraction, Source], QuadraticFormPoly]


class FormRegistry:
    _registry: Dict[Tuple[Energy, Source], FormBuilder] = {}

    @classmethod
    def register(cls, energy: Energy, source: Source, builder: FormBuilder) -> None:
        cls._registry[(Energy(energy), Source(source))] = builder

    @classmethod
    def registered(cls) -> list[tuple[Energy, Source]]:
        if not cls._registry:
            register_default_forms()
        return sorted(cls._registry, key=lambda k: (k[0].value, k[1].value))

    @classmethod
    def create(
        cls,
        energy: Energy,
        source: Source,
        h: Hypersphere,
        K: Fraction = Fraction(1),
        norms: Source = Source.COMPOSITION,
    ) -> QuadraticFormPoly:
        try:
            key = (Energy(energy), Source(source))
        except ValueError as exc:
            raise ValidationError(str(exc), context={"energy": str(energy), "source": str(source)}) from exc
        if key not in cls._registry:
            register_default_forms()
        if key not in cls._registry:
            raise ValidationError(
                f"No quadratic form for energy '{key[0].value}' from source '{key[1].value}'",
                context={"registered": [f"{e.value}/{s.value}" for e, s in cls._registry]},
            )
        return cls._registry[key](h, Fraction(K), Source(norms))


def _printed_hat(h: Hypersphere, K: Fraction, norms: Source) -> QuadraticFormPoly:
    # shares the small-sphere guard of the printed Q4 route
    q4_form(h, Source.PRINTED, K)
    return printed_fixture(Energy.HAT, h.m)


def register_default_forms() -> None:
    for source in (Source.PRINTED, Source.GENERAL, Source.SMALL_SPHERE):
        FormRegistry.register(Energy.E4, source, lambda h, K, norms, s=source: q4_form(h, s, K, norms))
        FormRegistry.register(Energy.ES4, source, lambda h, K, norms, s=source: q4es_form(h, K, s, norms))
    FormRegistry.register(Energy.HAT, Source.PRINTED, _printed_hat)
    FormRegistry.register(Energy.HAT, Source.GENERAL, lambda h, K, norms: qhat_form(h, K))
    logger.debug("Registered %d quadratic-form builders", len(FormRegistry._registry))
