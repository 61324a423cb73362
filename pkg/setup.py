from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("twa._ckernel", ["src/twa/_ckernel.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
