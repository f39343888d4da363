"""
Configuration package for the growth engine.
"""

from .settings import settings

__all__ = ["settings"]
