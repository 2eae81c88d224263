"""Definitional interpreter and toolchain for the Lingua language."""

from .interp import BudgetExhausted, Interpreter
from .restore import load_program, restore
from .state import State, initial_state
from .values import DEFAULT_LIMITS, Limits

__all__ = ['BudgetExhausted', 'Interpreter', 'load_program', 'restore',
           'State', 'initial_state', 'DEFAULT_LIMITS', 'Limits']
__version__ = '0.1.0'
