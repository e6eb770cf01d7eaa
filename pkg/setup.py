"""Build script: compiles the optional Cython term-merge kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compilation only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "foldmap._speedups",
                ["src/foldmap/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
