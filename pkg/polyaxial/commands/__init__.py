from polyaxial.commands import norm, solve, transform, verify

__all__ = ["norm", "solve", "transform", "verify"]
