import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

# No -ffast-math: the kernel's reduction order must stay IEEE-exact so the
# compiled and pure-numpy backends produce bit-identical results.
extensions = [
    Extension(
        "fermiex._kernels",
        ["src/fermiex/_kernels.pyx"],
        include_dirs=[np.get_include()],
        extra_compile_args=["-O3"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
