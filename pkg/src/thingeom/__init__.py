"""Thin (Weyl-group level) geometry of finite G-sets: double coverings,
Clifford sets, discriminants, orientations, A3 = D3 and D4 triality."""

__version__ = "0.1.0"
