from omlbox.equivalence.naturality import mu_component, check_mu_naturality, LambdaMorphism, lambda_component, \
    check_lambda_bijective, check_lambda_normal_forms, check_lambda_word_definition, check_lambda_neg, \
    check_lambda_naturality
from omlbox.equivalence.roundtrip import RoundtripReport, RoundtripRunner, roundtrip
