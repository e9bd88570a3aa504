__all__ = [
    'cli', \
    'config', \
    'couplings', \
    'disk_oracle', \
    'geometry', \
    'kernels', \
    'spin_algebra'
]
