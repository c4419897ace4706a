"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (the numpy fallback is selected at
import time), so a missing compiler or Cython only costs speed, not
functionality.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "vlqa.kernels.cykernels",
                ["src/vlqa/kernels/cykernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError as exc:  # pragma: no cover - build-env dependent
    import warnings

    warnings.warn(f"vlqa: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
