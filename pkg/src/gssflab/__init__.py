__version__ = "0.1.0"

from . import contact, harness, manifold, submanifold, tachibana, tensor  # noqa: E402

__all__ = ["tensor", "manifold", "contact", "submanifold", "tachibana", "harness", "__version__"]
