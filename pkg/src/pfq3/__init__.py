"""pfq3: hypergeometric-function solutions for third-order linear ODEs.

Decides whether a third-order linear ODE with rational invariants is
equivalent, under rational changes of the independent variable combined with
gauge transformations of the dependent variable, to one of the four standard
third-order hypergeometric equations (3F2, 2F2, 1F2, 0F2), and when it is,
builds three independent closed-form solutions with verification evidence.
"""

__version__ = "0.1.0"
