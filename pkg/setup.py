"""
"""

from setuptools import setup, find_packages



setup(name='fricke',
      version='0.1.0',
      description=('Fricke characters of free groups: trace reduction, '
                   'graded pieces of the character ring and the action of '
                   'automorphisms on them'),
      packages=find_packages(exclude=['tests', 'docs']),
      license='MIT',
      install_requires=['pandas',
                        'numpy',
                        'matplotlib',
                        'scipy',
                        'sympy'],
      tests_require=['pytest',
                     'hypothesis'],
      entry_points={'console_scripts': ['fricke = fricke.cli:main']},
      classifiers=['Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering :: Mathematics'
                   ],
      )
