"""Exceptions raised by the certification layer."""

from arith import UsageError


class MembershipError(UsageError):
    """A claimed ideal member is not the stated combination of the generators."""


class SizeError(ValueError):
    """An algebra is larger than the configured bound for a dense computation."""
