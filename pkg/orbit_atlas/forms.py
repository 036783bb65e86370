"""
Validation of raw command-line values.

Each field parses one core type from text; the forms group the values
of one subcommand. A value that does not parse is a usage error, while
a value that parses but violates a mathematical precondition is left
for the library to reject.

"""
from django import forms

from .core import Multisegment, parse_dimension_vector, parse_multisegment
from .exceptions import OrbitAtlasError
from .homext import KINDS


class CoreTypeField(forms.CharField):
    """
    A text field whose cleaned value is a core type built by ``parser``.

    """
    parser = None

    def to_python(self, value):
        value = super().to_python(value)
        if value in self.empty_values:
            return None
        try:
            return self.parser(value)
        except OrbitAtlasError as exc:
            raise forms.ValidationError(str(exc), code='invalid')


class DimensionVectorField(CoreTypeField):
    parser = staticmethod(parse_dimension_vector)


class MultisegmentField(CoreTypeField):
    parser = staticmethod(parse_multisegment)


class DimensionForm(forms.Form):
    d = DimensionVectorField()


class MultisegmentForm(forms.Form):
    m = MultisegmentField()


class PairingForm(forms.Form):
    """
    Two multisegments and the pairing between them. A single segment is
    a multisegment too; both are read in the ambient of the larger one.

    """
    source = MultisegmentField()
    target = MultisegmentField()
    kind = forms.ChoiceField(choices=[(kind, kind) for kind in KINDS])

    def clean(self):
        cleaned_data = super().clean()
        source = cleaned_data.get('source')
        target = cleaned_data.get('target')
        if source is not None and target is not None:
            t = max(source.t, target.t)
            cleaned_data['source'] = Multisegment(t, source.multiplicities)
            cleaned_data['target'] = Multisegment(t, target.multiplicities)
        return cleaned_data


class FanForm(forms.Form):
    t = forms.IntegerField(min_value=1)


class VerifyForm(forms.Form):
    """
    Either one dimension vector or a number of random ones.

    """
    d = DimensionVectorField(required=False)
    random = forms.IntegerField(min_value=1, required=False)
    seed = forms.IntegerField(required=False)
    max_t = forms.IntegerField(min_value=1, required=False)
    max_entry = forms.IntegerField(min_value=1, required=False)

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        if (cleaned_data.get('d') is None) == \
                (cleaned_data.get('random') is None):
            raise forms.ValidationError(
                'give either -d or --random, not both or neither',
                code='exclusive',
            )
        return cleaned_data


class GlobalOptionsForm(forms.Form):
    budget = forms.IntegerField(min_value=1, required=False)
    tree_t_max = forms.IntegerField(min_value=1, required=False)
