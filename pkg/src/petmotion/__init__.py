"""petmotion: desk-scale listmode brain-PET simulation, data-driven rigid
head-motion estimation from one-second cloud images, and event-by-event
motion-compensated reconstruction."""

__version__ = "0.1.0"
