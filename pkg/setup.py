from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = cythonize(
    [Extension("gridgaps._kernels", ["src/gridgaps/_kernels.pyx"])],
    language_level=3,
)

setup(ext_modules=ext_modules)
