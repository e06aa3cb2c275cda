import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext = Extension(
    "qrdm._kernels",
    ["src/qrdm/_kernels.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3", "-march=native", "-funroll-loops"],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
)

if cythonize is not None:
    ext_modules = cythonize([ext], language_level=3)
else:
    ext_modules = []

setup(ext_modules=ext_modules)
