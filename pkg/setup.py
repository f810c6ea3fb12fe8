import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "partbias._kernel",
        ["src/partbias/_kernel.pyx"],
        include_dirs=[np.get_include()],
    )
]

# The compiled kernel is optional: the package falls back to the
# numpy implementation in _kernel_py when the extension is missing.
ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(ext_modules=ext_modules)
