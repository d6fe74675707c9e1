OPTIONS = {
    'use_dask': False,
    'num_workers': None,
    'default_order': 3,
    'check_axioms': True,
}


class set_options:
    """Set options for mcdeform in a controlled context.

    Currently supported options:

    - ``use_dask``: Enable dask for running independent sample checks
      in parallel. Default: ``False``.
    - ``num_workers``: Number of workers used by dask (``None`` lets
      dask decide). Default: ``None``.
    - ``default_order``: Truncation order used by the command line
      interface when ``--order`` is not given. Default: ``3``.
    - ``check_axioms``: Validate DG Lie algebras, morphisms and
      L-infinity morphisms when they are constructed. Default: ``True``.

    You can use ``set_options`` either as a context manager or to set
    global options.

    """

    def __init__(self, **kwargs):
        self.old = {}

        for k, v in kwargs.items():
            if k not in OPTIONS:
                raise ValueError(
                    "argument name {!r} is not in the set of valid options {!r}"
                    .format(k, set(OPTIONS))
                )
            if k == 'default_order' and (not isinstance(v, int) or v < 1):
                raise ValueError("default_order must be a positive integer")
            self.old[k] = OPTIONS[k]

        self._apply_update(kwargs)

    def _apply_update(self, options_dict):
        OPTIONS.update(options_dict)

    def __enter__(self):
        return

    def __exit__(self, type, value, traceback):
        self._apply_update(self.old)
