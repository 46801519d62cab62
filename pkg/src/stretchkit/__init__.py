__all__ = [
    '__version__',
]

# PEP 440 version; the docs and setup.cfg read it from here.
__version__ = '0.1.0.dev1'
