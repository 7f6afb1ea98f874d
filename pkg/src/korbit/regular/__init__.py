from .search import (
    RegularElementReport,
    find_fpf_prime_power,
    find_regular,
    find_semiregular_of_order,
    is_prime_power,
    is_regular_element,
)
from .survey import (
    SurveyOptions,
    SurveyStatus,
    polycirculant_survey,
    survey_row,
    survey_summary,
    write_report,
)

__all__ = [
    "RegularElementReport",
    "SurveyOptions",
    "SurveyStatus",
    "find_fpf_prime_power",
    "find_regular",
    "find_semiregular_of_order",
    "is_prime_power",
    "is_regular_element",
    "polycirculant_survey",
    "survey_row",
    "survey_summary",
    "write_report",
]
