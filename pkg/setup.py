"""Build script for the compiled ray-traversal core.

The extension is optional: if compilation fails (no C compiler, missing
Cython), the package installs anyway and falls back to the pure-NumPy
kernels in ``petmotion.kernels.fallback`` at import time.
"""

import numpy as np
from setuptools import Extension, setup


def make_extensions():
    from Cython.Build import cythonize

    ext = Extension(
        "petmotion.kernels._native",
        ["src/petmotion/kernels/_native.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3", "-ffp-contract=off"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


try:
    extensions = make_extensions()
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"petmotion: skipping compiled core ({exc}); pure-NumPy fallback will be used")
    extensions = []

setup(ext_modules=extensions)
