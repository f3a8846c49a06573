"""Build script: compiles the optional fast kernel.

The package is pure Python plus one optional Cython extension
(``epshift._speedups``).  If Cython or a C compiler is missing the build
falls back to the pure kernel, which is functionally identical.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "epshift._speedups",
                ["src/epshift/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
