"""Build the optional Cython kernel for the finite-field jet counter.

The package works without it; ``monozeta.ff`` falls back to the pure-Python
kernel when the extension is missing.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MONOZETA_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "monozeta.ff._kernel",
                    ["src/monozeta/ff/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        )

setup(ext_modules=ext_modules)
