import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

exts = [
    Extension(
        "fencemonoid._ckernels",
        ["src/fencemonoid/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        optional=True,
    ),
]

setup(
    ext_modules=cythonize(exts, compiler_directives={"language_level": 3}),
    zip_safe=False,
)
