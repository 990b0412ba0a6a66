from .frequency_vector import FrequencyVector, CumulativeDeviation, sample_uniform, cumulative_deviations, \
    from_target_deviations, read_frequencies, write_frequencies

__all__ = ['FrequencyVector', 'CumulativeDeviation', 'sample_uniform', 'cumulative_deviations',
           'from_target_deviations', 'read_frequencies', 'write_frequencies']
