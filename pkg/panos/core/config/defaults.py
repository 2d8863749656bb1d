# -*- coding: utf-8 -*-
# Copyright (c) 2026 PANOS Workbench Authors.
# All rights reserved. Licensed under the BSD 3-Clause License (see LICENSE).

# Every accepted key. Config files may only override keys listed here.
defaults = {
    'logging': {
        'log_level': 'WARNING',
        'log_file': '',
    },
    'world': {
        'dt': '0.01',
        'frame_rate': '10',
    },
    'collect': {
        'terrains': 'Concrete, Grass, Gravel, PebbleSidewalk',
        'payloads': '1.0, 6.8',
        'profiles': '2',
        'duration': '40',
        'segment': '5.0',
        'v_low': '0.3',
        'v_high': '2.5',
        'window': '1.0',
        'seed': '1',
        'save_runlogs': 'false',
    },
    'network': {
        'tokenizer_seed': '11',
        'param_seed': '12',
        'encoder_hidden': '60',
        'head_hidden': '32',
        'confidence_mode': 'select',
    },
    'train': {
        'epochs': '200',
        'batch_size': '32',
        'learning_rate': '0.001',
        'beta1': '0.9',
        'beta2': '0.999',
        'selection_fraction': '0.5',
        'seed': '3',
        'checkpoint_interval': '50',
        'alpha_init': '0.1',
        'alpha_weight_decay': '0.001',
        'slip_scope': 'selected',
    },
    'control': {
        'v_min': '0.2',
        'v_max': '2.0',
        'v_init': '2.0',
        'control_rate': '5',
        'window': '1.0',
        'fixed_velocity': '2.0',
        'reactive_gain': '0.5',
    },
    'compare': {
        'controllers': 'panos, fixed, reactive',
        'terrains': 'Grass, Gravel, PebbleSidewalk',
        'payloads': '1.0, 6.8',
        'seeds': '101, 102',
        'duration': '30',
    },
    'trial': {
        'controller': 'fixed',
        'terrain': 'Gravel',
        'payload': '6.8',
        'duration': '30',
        'seed': '101',
    },
    'pca': {
        'group_by': 'payload',
        'components': '10',
        'terrain': 'Gravel',
        'payloads': '1.0, 6.8',
        'duration': '60',
        'seed': '7',
    },
}
