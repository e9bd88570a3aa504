__all__ = [
    'python_utils', \
    'result_writer', \
    'shellspec_exceptions'
]
