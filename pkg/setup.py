"""Build glue for the optional compiled counting kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time); building it just makes the brute-force point
counts faster.  Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "quartica._countcore",
                ["src/quartica/_countcore.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
