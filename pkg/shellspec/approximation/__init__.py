__all__ = [
    'conjugation_field', \
    'epsilon_potential', \
    'field_checks', \
    'magnetic_alternative', \
    'profile', \
    'radial_shell_problem'
]
