"""
Representation factory.

Maps representation tags to builder classes so callers can construct reps
by name; new families register themselves at runtime.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Type

from .base import Rep, RepBuilder
from .tensor_square import Sym2RepBuilder, Wedge2RepBuilder
from .vector import VectorRepBuilder

logger = logging.getLogger(__name__)


class RepFactory:
    """Factory class for creating representations by tag."""

    # Registry of available builders
    _builders: Dict[str, Type[RepBuilder]] = {
        "vector": VectorRepBuilder,
        "sym2": Sym2RepBuilder,
        "wedge2": Wedge2RepBuilder,
    }

    @classmethod
    def register(cls, tag: str, builder: Type[RepBuilder]) -> None:
        """
        Register a new representation family.

        Args:
            tag (str): Name identifier for the family
            builder (Type[RepBuilder]): Builder class implementing RepBuilder
        """
        cls._builders[tag.lower()] = builder
        _create_cached.cache_clear()
        logger.info("Registered representation builder: %s -> %s", tag, builder.__name__)

    @classmethod
    def available(cls) -> List[str]:
        """
        Get list of registered tags.

        Returns:
            List[str]: Available representation tags
        """
        return list(cls._builders.keys())

    @classmethod
    def builder(cls, tag: str) -> Type[RepBuilder]:
        """
        Look up the builder class for a tag.

        Raises:
            ValueError: If tag is not registered
        """
        tag = tag.lower()
        if tag not in cls._builders:
            available = ", ".join(cls._builders.keys())
            raise ValueError(f"Unsupported representation '{tag}'. Available: {available}")
        return cls._builders[tag]

    @classmethod
    def min_n(cls, tag: str) -> int:
        return cls.builder(tag).min_n

    @classmethod
    def create(cls, tag: str, n: int) -> Rep:
        """
        Create (or reuse) a representation.

        Args:
            tag (str): Representation tag ('vector', 'sym2', 'wedge2')
            n (int): Base rank parameter

        Returns:
            Rep: Constructed representation

        Raises:
            ValueError: If tag is not supported
            RepresentationError: If n is out of range for the family
        """
        cls.builder(tag)
        return _create_cached(tag.lower(), n)


@lru_cache(maxsize=64)
def _create_cached(tag: str, n: int) -> Rep:
    logger.info("Creating %s representation for n=%d", tag, n)
    return RepFactory.builder(tag)(n).build()
