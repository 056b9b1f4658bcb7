from setuptools import setup


setup(name='plateau',
      version=1.0,
      description='Linear codes from plateaued functions over prime fields',
      packages=['plateau'],
      install_requires=[
          'numpy',
          'sympy>=1.13',
      ],
      entry_points={
          'console_scripts': ['plateau=plateau.__main__:main'],
      },
      test_suite='tests',
)
