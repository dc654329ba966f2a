"""Build the optional compiled search kernel; the package works without it."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SUZUKIHOPF_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("suzukihopf._ckernel", ["src/suzukihopf/_ckernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
