"""Runtime settings for toric-qh, read from the environment."""

from config.settings import settings

__all__ = ["settings"]
