"""
Faces of convex bodies in exact arithmetic: polytopes, face posets,
adherence, codimension and polar duality.
"""
