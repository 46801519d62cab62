"""
The once-punctured torus: slopes, Fricke traces, Fenchel-Nielsen charts,
Thurston's metric and norm, and the experiments built on them.
"""
