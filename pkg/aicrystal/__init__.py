"""aicrystal: AI-crystal tableau model for SO_n."""

__version__ = "1.0.0"
