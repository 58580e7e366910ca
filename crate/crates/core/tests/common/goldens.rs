//! Reference values from `tests/oracle/goldens.py` (numpy.kron + scipy expm).

#![allow(dead_code)]

pub const FIG2A_SPREAD: [f64; 16] = [
    0.0,
    2.9042435294991584,
    2.737123634747262,
    2.900142684256765,
    2.655883195368082,
    2.803631265241292,
    3.07964523391567,
    3.2840351919886674,
    3.5174726926186395,
    3.729539460028475,
    3.925933997512991,
    4.225817467963332,
    4.414023170403196,
    4.733867877804178,
    4.632991071224429,
    5.0590939749154025,
];

pub const FIG2B_SPREAD: [f64; 16] = [
    0.0,
    2.9042435294991584,
    2.603613421893904,
    2.442094871062766,
    2.6743262268829677,
    2.7882175840951704,
    2.373750939189867,
    2.5590279513865273,
    2.8115062608041765,
    2.302535306885771,
    2.5479078687450505,
    2.6588538097841767,
    2.3875289369334696,
    2.657792410065403,
    2.7831929214041145,
    2.271291787875992,
];

pub const FIG2C_BONDS23: [f64; 16] = [
    2.0,
    1.6545084971874742,
    1.4283813728906019,
    0.9062499999999993,
    0.6532817706518654,
    0.5152421718664728,
    0.4490199750952374,
    0.45433393131525457,
    0.3961455218662148,
    0.37523976523104624,
    0.42386833018274944,
    0.5456745271127686,
    0.7231539908885609,
    0.8316866050902988,
    0.882350226924052,
    0.8811410046499023,
];

pub const FIG2D_BONDS23: [f64; 16] = [
    2.0,
    1.6545084971874742,
    1.467443872890604,
    1.1848948561534534,
    1.1448053497099462,
    1.2026504724026066,
    1.1862100150327466,
    1.2399359212697854,
    1.0675019393562877,
    0.9426671079071864,
    0.7421987785850768,
    0.7425868159164408,
    0.6221296421319202,
    0.6546193079459525,
    0.7009257970893417,
    0.7482237729302298,
];

pub const FIG3_S_TOT: [f64; 16] = [
    4.0,
    4.000000000000008,
    3.7204915028125307,
    4.043186437851564,
    4.056759640106876,
    3.7996711173003903,
    3.360411959027181,
    3.6909976942785074,
    3.7901522993557606,
    3.4896092083643877,
    3.0716339452614125,
    3.25989965959394,
    3.3512760366632737,
    3.3356647270595396,
    3.1475366170881047,
    3.09250651901744,
];

pub const FIG3_D_TOT: [f64; 16] = [
    2.0,
    2.51823725421879,
    2.538856943476619,
    2.432967181472221,
    2.133129171614633,
    2.676708040929042,
    2.6268816094041276,
    2.543814973765963,
    2.5847926984426555,
    2.8926444332036563,
    2.663000505564551,
    2.7858329784865195,
    2.904951574590534,
    2.8205354021576747,
    2.6272954187552884,
    2.8894516508877732,
];

pub const FIG3_N1: [f64; 16] = [
    0.0,
    0.36198725421878897,
    0.34148247455083497,
    0.41819378563251974,
    0.15153741791129685,
    0.5219037620055373,
    0.5434506216698132,
    0.5339038025559395,
    0.45952131702873866,
    0.7819865177540987,
    0.683945373360823,
    0.7324212099073018,
    0.7956888698406629,
    0.8059713023225573,
    0.6726238681724935,
    0.891569918443291,
];

pub const FIG3_N4: [f64; 16] = [
    1.0,
    0.5612475366454857,
    0.3311261215711887,
    0.5306048341092273,
    0.748582715995757,
    0.5107618382734771,
    0.39776250699442867,
    0.4665097821154698,
    0.494095849972784,
    0.40038362041050074,
    0.3664962730420214,
    0.3807883310293292,
    0.4439922090068416,
    0.37212504891354886,
    0.29258437584037333,
    0.27775853037061476,
];

pub const FIG4_H8_N1: [f64; 16] = [
    2.0,
    1.6857584971874686,
    1.2868133676866702,
    1.1704871877596135,
    1.3916147803994021,
    1.4002021637876085,
    1.160254487382201,
    0.8756383667963592,
    0.7699301103294484,
    1.0636644595203144,
    1.0883514144567097,
    1.0554052086008499,
    0.952382344328154,
    1.0285416644107659,
    1.2054134356415644,
    1.3539721063660197,
];

pub const FIG4_H8_N4: [f64; 16] = [
    0.0,
    0.007664356018071535,
    0.03843945998318138,
    0.06534935851827993,
    0.0644831551284483,
    0.02490301297121344,
    0.015659558546005474,
    0.04634106387768153,
    0.07543755027914782,
    0.1049883435598033,
    0.08642721895252192,
    0.06470101659914829,
    0.06738595293070299,
    0.0686584996895033,
    0.06635261951786524,
    0.07067492498832231,
];

pub const FIG4_H4_N1: [f64; 16] = [
    2.0,
    1.6857584971874686,
    1.3935577203320442,
    1.9636308210007924,
    1.4279049643236892,
    1.2980044932479486,
    1.3716139622974377,
    1.2307162734695463,
    0.9628251510762379,
    1.2351688470653113,
    1.085275715422904,
    1.1428570246639136,
    1.2441610345816012,
    1.3114546438667753,
    1.2317976235292212,
    1.3985795917306327,
];

pub const FIG4_H4_N4: [f64; 16] = [
    0.0,
    0.007664356018071535,
    0.03548861372890605,
    0.03876404230129775,
    0.028818186528673486,
    0.07877736030836627,
    0.11953416527373595,
    0.06959036703588155,
    0.06918922109954743,
    0.13373152898559365,
    0.12542253706093234,
    0.056399507322035976,
    0.0737046626150237,
    0.09925308032731614,
    0.06592281762868617,
    0.05671761898155943,
];

pub const FIG4_HAM_H4_N4: [f64; 16] = [
    0.0,
    0.0071157280357957205,
    0.048253439149108186,
    0.07665890195793044,
    0.08996331575838251,
    0.19071167347251833,
    0.27225896058499705,
    0.22691634565692276,
    0.28528547023302303,
    0.47365437473609384,
    0.4520670150493284,
    0.36051986153344473,
    0.44648849607125063,
    0.4903300121526298,
    0.409031708155705,
    0.44551163419448647,
];

pub const TROTTER_ERRORS: [f64; 3] = [
    0.012946013170599256,
    0.0032352944209889153,
    0.0008083360790013941,
];
