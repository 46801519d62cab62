from stretchkit.commands.base import full_kwargs


def test_no_overrides():
    "Without overrides, the configured defaults are returned"
    assert full_kwargs(None, {'depth': 7, 'seed': 0}) == {'depth': 7, 'seed': 0}


def test_overrides_added():
    "Overrides for unconfigured keys are added"
    assert full_kwargs({'t': 1.0}, {'depth': 7}) == {'depth': 7, 't': 1.0}


def test_overrides_win():
    "An explicit setting beats the configured one"
    assert full_kwargs({'depth': 3, 'command': 'norm'}, {'depth': 7, 'seed': 2}) == {
        'depth': 3, 'seed': 2, 'command': 'norm'
    }


def test_defaults_untouched():
    "The configured defaults are not modified"
    defaults = {'depth': 7}
    full_kwargs({'depth': 2}, defaults)
    assert defaults == {'depth': 7}
