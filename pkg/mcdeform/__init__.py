from .options import set_options


__all__ = ['core', 'dgla', 'gauge', 'deligne', 'twogroupoid', 'linf',
           'io', 'fixtures', 'samples']


__version__ = '0.1.0'
