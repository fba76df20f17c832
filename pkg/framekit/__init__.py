"""
framekit: finite-truncation analysis of Schauder frames (min-norm sequence
space, reconstruction/decomposition operators, excess, c0-distortion).
"""
