import traitlets


class BaseModel(traitlets.HasTraits):
    """Validated, immutable record.

    Every field is a trait, so values are checked (and normalized) on construction.
    Once constructed the trait values cannot be reassigned.
    """

    def __init__(self, **kwargs):
        # Raise error on unknown keyword name
        trait_names = self.trait_names()
        for provided_trait_name in kwargs.keys():
            if provided_trait_name not in trait_names:
                raise TypeError(f"unexpected keyword argument '{provided_trait_name}'")

        super().__init__(**kwargs)
        self._frozen = True

    def __setattr__(self, name, value):
        if getattr(self, "_frozen", False) and self.has_trait(name):
            raise AttributeError(
                f"cannot assign to '{name}': {type(self).__name__} is immutable"
            )
        super().__setattr__(name, value)
