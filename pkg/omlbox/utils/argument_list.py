# @Time   : 2026/10/17
# @Author : OMLBoxTeam

general_arguments = ['command', 'seed', 'state', 'log_dir', 'format', 'show_progress', 'report']

checking_arguments = [
    'samples', 'exhaustive_threshold', 'max_subset_size', 'join_exhaustive_size', 'max_word_len', 'quote_samples',
    'morphism_samples', 'morphism_exhaustive_threshold', 'law_samples'
]

limit_arguments = ['monoid_cap', 'compose_table_limit', 'automorphism_guard', 'product_guard']
