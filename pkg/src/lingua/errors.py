"""The fixed catalog of abstract error words.

Errors are plain words such as 'division-by-zero'.  Interpretation is
reactive: the first error generated is carried along unchanged until an
error handler consumes it or the program ends.
"""

# data-level errors (composite constructors)
DIVISION_BY_ZERO = 'division-by-zero'
OVERLOAD = 'overload'
BOOLEAN_EXPECTED = 'Boolean-expected'
NUMBER_EXPECTED = 'number-expected'
WORD_EXPECTED = 'word-expected'
LIST_EXPECTED = 'list-expected'
ARRAY_EXPECTED = 'array-expected'
RECORD_EXPECTED = 'record-expected'
SIMPLE_DATA_EXPECTED = 'simple-data-expected'
EMPTY_LIST = 'empty-list'
ARRAY_INDEX_UNDEFINED = 'array-index-undefined'
INCONSISTENT_BODIES = 'inconsistent-bodies'
ATTRIBUTE_NOT_FREE = 'attribute-not-free'
UNKNOWN_ATTRIBUTE = 'unknown-attribute'

# expression- and instruction-level errors
UNDECLARED_VARIABLE = 'undeclared-variable'
UNINITIALIZED_VARIABLE = 'uninitialized-variable'
TYPE_CONSTANT_UNDEFINED = 'type-constant-undefined'
VARIABLE_DECLARED = 'variable-declared'
IDENTIFIER_NOT_FREE = 'identifier-not-free'
IDENTIFIER_NOT_DECLARED = 'identifier-not-declared'
NO_COHERENCE = 'no-coherence'
A_YOKE_EXPECTED = 'a-yoke-expected'
YOKE_NOT_SATISFIED = 'yoke-not-satisfied'
ERROR_HANDLING_EXECUTED = 'error-handling-executed'
ERROR_HANDLING_NOT_EXECUTED = 'error-handling-not-executed'
ASSERTION_NOT_SATISFIED = 'assertion-not-satisfied'

# procedure errors
PROCEDURE_NOT_DECLARED = 'procedure-not-declared'
PROCEDURE_NOT_IMPERATIVE = 'procedure-not-imperative'
PROCEDURE_NOT_FUNCTIONAL = 'procedure-not-functional'
PROCEDURE_DECLARED = 'procedure-declared'
PROCEDURE_NAMES_REPEATED = 'procedure-names-repeated'
FORMAL_PAR_REPETITIONS = 'formal-par-repetitions'
ACTUAL_PAR_REPETITIONS = 'actual-par-repetitions'
INCOMPATIBLE_NUMBERS_OF_PARAMETERS = 'incompatible-numbers-of-parameters'
VALUE_PARAMETER_UNDEFINED = 'value-parameter undefined'
VALUE_PARAMETER_UNINITIALIZED = 'value-parameter uninitialized'
REFERENCE_PARAMETER_UNDECLARED = 'reference-parameter undeclared'
REFERENCE_PARAMETER_UNINITIALIZED = 'reference-parameter uninitialized'
TYPE_ERROR_FORMAL_VALUE = 'type-error-of-formal-value-parameter'
TYPE_ERROR_FORMAL_REFERENCE = 'type-error-of-formal-reference-parameter'
INCOMPATIBLE_BODIES_VALUE = 'incompatible-bodies-of-value-parameters'
INCOMPATIBLE_BODIES_REFERENCE = 'incompatible-bodies-of-reference-parameters'
YOKE_NOT_SATISFIED_BY_VAL = 'yoke-not-satisfied-by-val'
YOKE_NOT_SATISFIED_BY_REF = 'yoke-not-satisfied-by-ref'
VALUE_OF_REFERENCE_PARAMETER_UNDEFINED = 'value-of-reference-parameter-undefined'
BODIES_NOT_COHERENT = 'bodies-not-coherent'
