"""
Forecaster Factory - Trains any ModelKind from an ExperimentConfig.

ANN and ARIMA baselines run on the raw series through the same scaling
pipeline PPFD applies to its residual, so all models see comparable inputs.
"""

from dataclasses import replace

from loguru import logger

from ppfd.application.interfaces.forecasters import ForecasterFactory, ForecastModel
from ppfd.domain.entities.evaluation import ExperimentConfig, ModelKind
from ppfd.domain.entities.series import TimeSeries
from ppfd.domain.exceptions import ValidationError
from ppfd.infrastructure.forecasters.ann import ann_fit
from ppfd.infrastructure.forecasters.arima import arima_fit, arima_select_fit
from ppfd.infrastructure.forecasters.fourier import fourier_fit
from ppfd.infrastructure.forecasters.ppfd import BaseFitter, normalized_fit, ppfd_fit
from ppfd.infrastructure.forecasters.windows import make_windows


class DefaultForecasterFactory(ForecasterFactory):
    """Builds ANN, ARIMA, FOURIER and PPFD models."""

    def base_fitter(self, base: str, config: ExperimentConfig, seed: int) -> BaseFitter:
        """Fitting function for the residual model on a normalized series."""
        if base == "ann":
            ann_config = replace(config.ann, seed=seed)

            def fit_ann(y: TimeSeries) -> ForecastModel:
                return ann_fit(make_windows(y, config.resolved_window(y.step)), ann_config)

            return fit_ann

        if base == "arima":
            arima = config.arima

            def fit_arima(y: TimeSeries) -> ForecastModel:
                if arima.order is not None:
                    p, q = arima.order
                    return arima_fit(y.values, p, q, max_iter=arima.max_iter)
                return arima_select_fit(
                    y.values, arima.p_max, arima.q_max, max_iter=arima.max_iter
                )

            return fit_arima

        raise ValidationError("model", f"unknown base model {base!r}")

    def fit(
        self,
        kind: ModelKind,
        training: TimeSeries,
        config: ExperimentConfig,
        seed: int,
    ) -> ForecastModel:
        training.require_complete(min_length=2)
        logger.debug("Fitting {} on {} samples (seed={})", kind.value, len(training), seed)

        if kind is ModelKind.FOURIER:
            return fourier_fit(training)

        fit_base = self.base_fitter(kind.base, config, seed)
        if kind.is_ppfd:
            model = ppfd_fit(training, config.c, fit_base, detrend=config.detrend)
            logger.debug(
                "Seasonal periods: {}",
                ", ".join(f"{s.period:.2f}" for s in model.sinusoids),
            )
            return model
        return normalized_fit(training, fit_base)
