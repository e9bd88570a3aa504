__all__ = [
    'boundary_operator', \
    'discretization', \
    'eigenvalue_scan', \
    'krein_resolvent', \
    'layer_potential'
]
