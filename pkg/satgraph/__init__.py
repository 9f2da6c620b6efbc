"""
Saturation of k-edge-connected and k-connected graph families.

`satgraph` builds the extremal constructions, decides saturation exactly, measures
saturation and extremal numbers by exhaustive search at small orders, and checks the
spectral-radius bounds these graphs satisfy.
"""
