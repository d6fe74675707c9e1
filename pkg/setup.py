from setuptools import setup, find_packages
from os.path import exists


setup(name='mcdeform',
      version='0.1.0',
      description=('Exact deformation theory: Maurer-Cartan elements, gauge '
                   'actions and the Deligne 2-groupoid of DG Lie algebras'),
      license='BSD-Clause3',
      keywords='python deformation-theory dgla maurer-cartan l-infinity',
      packages=find_packages(),
      long_description=(open('README.md').read() if exists('README.md')
                        else ''),
      python_requires='>=3.8',
      install_requires=['numpy', 'sympy'],
      extras_require={'dask': ['dask'],
                      'test': ['pytest >= 3.3.0', 'hypothesis']},
      entry_points={'console_scripts': ['mcdeform = mcdeform.cli:main']},
      zip_safe=False)
