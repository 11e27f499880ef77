#pragma once

#include <cmath>
#include <cstddef>

namespace aldr::detail {

// Upper 1e-3 quantiles of the chi-square distribution, indexed by
// (degrees of freedom - 1) for dof = 1..1100.
inline constexpr double kChiSquareQuantile1e3[] = {
    1.0827566171e+01, 1.3815510558e+01, 1.6266236196e+01, 1.8466826953e+01,
    2.0515005652e+01, 2.2457744485e+01, 2.4321886348e+01, 2.6124481558e+01,
    2.7877164871e+01, 2.9588298445e+01, 3.1264133620e+01, 3.2909490407e+01,
    3.4528178975e+01, 3.6123273680e+01, 3.7697298218e+01, 3.9252354791e+01,
    4.0790216707e+01, 4.2312396332e+01, 4.3820195965e+01, 4.5314746618e+01,
    4.6797038042e+01, 4.8267942291e+01, 4.9728232466e+01, 5.1178597777e+01,
    5.2619655776e+01, 5.4051962389e+01, 5.5476020206e+01, 5.6892285393e+01,
    5.8301173490e+01, 5.9703064304e+01, 6.1098306081e+01, 6.2487219057e+01,
    6.3870098522e+01, 6.5247217461e+01, 6.6618828844e+01, 6.7985167626e+01,
    6.9346452496e+01, 7.0702887412e+01, 7.2054662952e+01, 7.3401957519e+01,
    7.4744938398e+01, 7.6083762708e+01, 7.7418578241e+01, 7.8749524228e+01,
    8.0076732011e+01, 8.1400325659e+01, 8.2720422519e+01, 8.4037133717e+01,
    8.5350564609e+01, 8.6660815190e+01, 8.7967980476e+01, 8.9272150834e+01,
    9.0573412305e+01, 9.1871846882e+01, 9.3167532772e+01, 9.4460544642e+01,
    9.5750953832e+01, 9.7038828567e+01, 9.8324234135e+01, 9.9607233070e+01,
    1.0088788531e+02, 1.0216624833e+02, 1.0344237732e+02, 1.0471632526e+02,
    1.0598814309e+02, 1.0725787977e+02, 1.0852558244e+02, 1.0979129647e+02,
    1.1105506556e+02, 1.1231693185e+02, 1.1357693596e+02, 1.1483511711e+02,
    1.1609151312e+02, 1.1734616057e+02, 1.1859909476e+02, 1.1985034986e+02,
    1.2109995888e+02, 1.2234795378e+02, 1.2359436551e+02, 1.2483922402e+02,
    1.2608255833e+02, 1.2732439659e+02, 1.2856476607e+02, 1.2980369323e+02,
    1.3104120375e+02, 1.3227732253e+02, 1.3351207379e+02, 1.3474548103e+02,
    1.3597756707e+02, 1.3720835413e+02, 1.3843786378e+02, 1.3966611702e+02,
    1.4089313427e+02, 1.4211893541e+02, 1.4334353978e+02, 1.4456696622e+02,
    1.4578923309e+02, 1.4701035826e+02, 1.4823035917e+02, 1.4944925278e+02,
    1.5066705567e+02, 1.5188378398e+02, 1.5309945349e+02, 1.5431407955e+02,
    1.5552767718e+02, 1.5674026103e+02, 1.5795184541e+02, 1.5916244429e+02,
    1.6037207132e+02, 1.6158073983e+02, 1.6278846287e+02, 1.6399525317e+02,
    1.6520112319e+02, 1.6640608512e+02, 1.6761015088e+02, 1.6881333212e+02,
    1.7001564025e+02, 1.7121708643e+02, 1.7241768160e+02, 1.7361743646e+02,
    1.7481636147e+02, 1.7601446691e+02, 1.7721176282e+02, 1.7840825905e+02,
    1.7960396526e+02, 1.8079889089e+02, 1.8199304522e+02, 1.8318643733e+02,
    1.8437907614e+02, 1.8557097039e+02, 1.8676212864e+02, 1.8795255930e+02,
    1.8914227062e+02, 1.9033127069e+02, 1.9151956746e+02, 1.9270716872e+02,
    1.9389408213e+02, 1.9508031520e+02, 1.9626587530e+02, 1.9745076969e+02,
    1.9863500548e+02, 1.9981858965e+02, 2.0100152909e+02, 2.0218383053e+02,
    2.0336550061e+02, 2.0454654583e+02, 2.0572697262e+02, 2.0690678726e+02,
    2.0808599595e+02, 2.0926460477e+02, 2.1044261971e+02, 2.1162004666e+02,
    2.1279689140e+02, 2.1397315963e+02, 2.1514885695e+02, 2.1632398888e+02,
    2.1749856085e+02, 2.1867257818e+02, 2.1984604614e+02, 2.2101896990e+02,
    2.2219135455e+02, 2.2336320510e+02, 2.2453452648e+02, 2.2570532356e+02,
    2.2687560112e+02, 2.2804536388e+02, 2.2921461647e+02, 2.3038336348e+02,
    2.3155160940e+02, 2.3271935867e+02, 2.3388661568e+02, 2.3505338472e+02,
    2.3621967004e+02, 2.3738547584e+02, 2.3855080623e+02, 2.3971566529e+02,
    2.4088005702e+02, 2.4204398537e+02, 2.4320745425e+02, 2.4437046749e+02,
    2.4553302889e+02, 2.4669514218e+02, 2.4785681105e+02, 2.4901803913e+02,
    2.5017883002e+02, 2.5133918725e+02, 2.5249911431e+02, 2.5365861464e+02,
    2.5481769165e+02, 2.5597634868e+02, 2.5713458906e+02, 2.5829241603e+02,
    2.5944983283e+02, 2.6060684264e+02, 2.6176344860e+02, 2.6291965381e+02,
    2.6407546134e+02, 2.6523087420e+02, 2.6638589538e+02, 2.6754052782e+02,
    2.6869477445e+02, 2.6984863812e+02, 2.7100212169e+02, 2.7215522795e+02,
    2.7330795967e+02, 2.7446031960e+02, 2.7561231042e+02, 2.7676393482e+02,
    2.7791519543e+02, 2.7906609486e+02, 2.8021663568e+02, 2.8136682043e+02,
    2.8251665164e+02, 2.8366613179e+02, 2.8481526333e+02, 2.8596404869e+02,
    2.8711249028e+02, 2.8826059046e+02, 2.8940835158e+02, 2.9055577597e+02,
    2.9170286590e+02, 2.9284962365e+02, 2.9399605146e+02, 2.9514215154e+02,
    2.9628792609e+02, 2.9743337728e+02, 2.9857850723e+02, 2.9972331808e+02,
    3.0086781192e+02, 3.0201199083e+02, 3.0315585685e+02, 3.0429941201e+02,
    3.0544265832e+02, 3.0658559777e+02, 3.0772823231e+02, 3.0887056390e+02,
    3.1001259445e+02, 3.1115432587e+02, 3.1229576003e+02, 3.1343689881e+02,
    3.1457774405e+02, 3.1571829756e+02, 3.1685856116e+02, 3.1799853663e+02,
    3.1913822574e+02, 3.2027763025e+02, 3.2141675187e+02, 3.2255559234e+02,
    3.2369415335e+02, 3.2483243657e+02, 3.2597044367e+02, 3.2710817631e+02,
    3.2824563611e+02, 3.2938282468e+02, 3.3051974363e+02, 3.3165639455e+02,
    3.3279277899e+02, 3.3392889851e+02, 3.3506475465e+02, 3.3620034893e+02,
    3.3733568287e+02, 3.3847075795e+02, 3.3960557565e+02, 3.4074013745e+02,
    3.4187444479e+02, 3.4300849911e+02, 3.4414230184e+02, 3.4527585438e+02,
    3.4640915814e+02, 3.4754221450e+02, 3.4867502484e+02, 3.4980759051e+02,
    3.5093991286e+02, 3.5207199323e+02, 3.5320383294e+02, 3.5433543329e+02,
    3.5546679560e+02, 3.5659792114e+02, 3.5772881120e+02, 3.5885946703e+02,
    3.5998988989e+02, 3.6112008102e+02, 3.6225004166e+02, 3.6337977301e+02,
    3.6450927630e+02, 3.6563855272e+02, 3.6676760346e+02, 3.6789642970e+02,
    3.6902503260e+02, 3.7015341333e+02, 3.7128157302e+02, 3.7240951282e+02,
    3.7353723386e+02, 3.7466473726e+02, 3.7579202411e+02, 3.7691909554e+02,
    3.7804595261e+02, 3.7917259642e+02, 3.8029902803e+02, 3.8142524852e+02,
    3.8255125893e+02, 3.8367706031e+02, 3.8480265370e+02, 3.8592804012e+02,
    3.8705322060e+02, 3.8817819614e+02, 3.8930296776e+02, 3.9042753644e+02,
    3.9155190317e+02, 3.9267606893e+02, 3.9380003470e+02, 3.9492380143e+02,
    3.9604737009e+02, 3.9717074161e+02, 3.9829391694e+02, 3.9941689702e+02,
    4.0053968277e+02, 4.0166227510e+02, 4.0278467494e+02, 4.0390688318e+02,
    4.0502890071e+02, 4.0615072844e+02, 4.0727236724e+02, 4.0839381799e+02,
    4.0951508156e+02, 4.1063615881e+02, 4.1175705060e+02, 4.1287775778e+02,
    4.1399828119e+02, 4.1511862166e+02, 4.1623878004e+02, 4.1735875714e+02,
    4.1847855378e+02, 4.1959817077e+02, 4.2071760892e+02, 4.2183686903e+02,
    4.2295595189e+02, 4.2407485830e+02, 4.2519358902e+02, 4.2631214485e+02,
    4.2743052654e+02, 4.2854873487e+02, 4.2966677060e+02, 4.3078463447e+02,
    4.3190232724e+02, 4.3301984965e+02, 4.3413720244e+02, 4.3525438634e+02,
    4.3637140208e+02, 4.3748825037e+02, 4.3860493195e+02, 4.3972144751e+02,
    4.4083779776e+02, 4.4195398341e+02, 4.4307000515e+02, 4.4418586368e+02,
    4.4530155968e+02, 4.4641709384e+02, 4.4753246682e+02, 4.4864767931e+02,
    4.4976273197e+02, 4.5087762547e+02, 4.5199236046e+02, 4.5310693760e+02,
    4.5422135753e+02, 4.5533562091e+02, 4.5644972838e+02, 4.5756368056e+02,
    4.5867747810e+02, 4.5979112162e+02, 4.6090461175e+02, 4.6201794910e+02,
    4.6313113428e+02, 4.6424416792e+02, 4.6535705062e+02, 4.6646978298e+02,
    4.6758236560e+02, 4.6869479908e+02, 4.6980708400e+02, 4.7091922096e+02,
    4.7203121053e+02, 4.7314305331e+02, 4.7425474985e+02, 4.7536630074e+02,
    4.7647770655e+02, 4.7758896783e+02, 4.7870008515e+02, 4.7981105907e+02,
    4.8092189014e+02, 4.8203257891e+02, 4.8314312593e+02, 4.8425353174e+02,
    4.8536379687e+02, 4.8647392188e+02, 4.8758390729e+02, 4.8869375362e+02,
    4.8980346142e+02, 4.9091303119e+02, 4.9202246346e+02, 4.9313175874e+02,
    4.9424091755e+02, 4.9534994040e+02, 4.9645882780e+02, 4.9756758024e+02,
    4.9867619823e+02, 4.9978468227e+02, 5.0089303285e+02, 5.0200125046e+02,
    5.0310933560e+02, 5.0421728874e+02, 5.0532511036e+02, 5.0643280096e+02,
    5.0754036100e+02, 5.0864779096e+02, 5.0975509131e+02, 5.1086226251e+02,
    5.1196930504e+02, 5.1307621935e+02, 5.1418300591e+02, 5.1528966517e+02,
    5.1639619758e+02, 5.1750260360e+02, 5.1860888368e+02, 5.1971503826e+02,
    5.2082106779e+02, 5.2192697270e+02, 5.2303275343e+02, 5.2413841043e+02,
    5.2524394412e+02, 5.2634935494e+02, 5.2745464331e+02, 5.2855980966e+02,
    5.2966485441e+02, 5.3076977798e+02, 5.3187458080e+02, 5.3297926327e+02,
    5.3408382581e+02, 5.3518826884e+02, 5.3629259275e+02, 5.3739679797e+02,
    5.3850088489e+02, 5.3960485391e+02, 5.4070870543e+02, 5.4181243986e+02,
    5.4291605758e+02, 5.4401955899e+02, 5.4512294448e+02, 5.4622621445e+02,
    5.4732936926e+02, 5.4843240932e+02, 5.4953533500e+02, 5.5063814668e+02,
    5.5174084474e+02, 5.5284342956e+02, 5.5394590151e+02, 5.5504826095e+02,
    5.5615050827e+02, 5.5725264383e+02, 5.5835466800e+02, 5.5945658113e+02,
    5.6055838359e+02, 5.6166007574e+02, 5.6276165794e+02, 5.6386313055e+02,
    5.6496449391e+02, 5.6606574838e+02, 5.6716689431e+02, 5.6826793205e+02,
    5.6936886194e+02, 5.7046968434e+02, 5.7157039957e+02, 5.7267100799e+02,
    5.7377150993e+02, 5.7487190573e+02, 5.7597219573e+02, 5.7707238025e+02,
    5.7817245964e+02, 5.7927243422e+02, 5.8037230431e+02, 5.8147207026e+02,
    5.8257173238e+02, 5.8367129099e+02, 5.8477074642e+02, 5.8587009899e+02,
    5.8696934901e+02, 5.8806849681e+02, 5.8916754269e+02, 5.9026648698e+02,
    5.9136532998e+02, 5.9246407201e+02, 5.9356271337e+02, 5.9466125437e+02,
    5.9575969532e+02, 5.9685803651e+02, 5.9795627826e+02, 5.9905442087e+02,
    6.0015246462e+02, 6.0125040983e+02, 6.0234825679e+02, 6.0344600580e+02,
    6.0454365713e+02, 6.0564121110e+02, 6.0673866799e+02, 6.0783602809e+02,
    6.0893329168e+02, 6.1003045906e+02, 6.1112753051e+02, 6.1222450631e+02,
    6.1332138674e+02, 6.1441817209e+02, 6.1551486264e+02, 6.1661145865e+02,
    6.1770796042e+02, 6.1880436821e+02, 6.1990068230e+02, 6.2099690296e+02,
    6.2209303046e+02, 6.2318906508e+02, 6.2428500708e+02, 6.2538085673e+02,
    6.2647661429e+02, 6.2757228003e+02, 6.2866785422e+02, 6.2976333711e+02,
    6.3085872897e+02, 6.3195403006e+02, 6.3304924063e+02, 6.3414436095e+02,
    6.3523939127e+02, 6.3633433184e+02, 6.3742918292e+02, 6.3852394476e+02,
    6.3961861761e+02, 6.4071320172e+02, 6.4180769735e+02, 6.4290210474e+02,
    6.4399642413e+02, 6.4509065578e+02, 6.4618479992e+02, 6.4727885680e+02,
    6.4837282666e+02, 6.4946670975e+02, 6.5056050630e+02, 6.5165421655e+02,
    6.5274784074e+02, 6.5384137910e+02, 6.5493483188e+02, 6.5602819931e+02,
    6.5712148161e+02, 6.5821467903e+02, 6.5930779179e+02, 6.6040082013e+02,
    6.6149376427e+02, 6.6258662444e+02, 6.6367940086e+02, 6.6477209378e+02,
    6.6586470340e+02, 6.6695722996e+02, 6.6804967367e+02, 6.6914203476e+02,
    6.7023431345e+02, 6.7132650997e+02, 6.7241862452e+02, 6.7351065733e+02,
    6.7460260862e+02, 6.7569447860e+02, 6.7678626748e+02, 6.7787797549e+02,
    6.7896960283e+02, 6.8006114972e+02, 6.8115261636e+02, 6.8224400298e+02,
    6.8333530977e+02, 6.8442653695e+02, 6.8551768473e+02, 6.8660875331e+02,
    6.8769974290e+02, 6.8879065371e+02, 6.8988148593e+02, 6.9097223977e+02,
    6.9206291544e+02, 6.9315351313e+02, 6.9424403305e+02, 6.9533447540e+02,
    6.9642484037e+02, 6.9751512817e+02, 6.9860533898e+02, 6.9969547302e+02,
    7.0078553047e+02, 7.0187551153e+02, 7.0296541639e+02, 7.0405524525e+02,
    7.0514499829e+02, 7.0623467572e+02, 7.0732427772e+02, 7.0841380447e+02,
    7.0950325618e+02, 7.1059263303e+02, 7.1168193520e+02, 7.1277116289e+02,
    7.1386031627e+02, 7.1494939554e+02, 7.1603840088e+02, 7.1712733247e+02,
    7.1821619050e+02, 7.1930497514e+02, 7.2039368659e+02, 7.2148232501e+02,
    7.2257089060e+02, 7.2365938352e+02, 7.2474780397e+02, 7.2583615210e+02,
    7.2692442812e+02, 7.2801263218e+02, 7.2910076447e+02, 7.3018882515e+02,
    7.3127681442e+02, 7.3236473243e+02, 7.3345257936e+02, 7.3454035538e+02,
    7.3562806067e+02, 7.3671569539e+02, 7.3780325972e+02, 7.3889075382e+02,
    7.3997817786e+02, 7.4106553202e+02, 7.4215281645e+02, 7.4324003133e+02,
    7.4432717682e+02, 7.4541425309e+02, 7.4650126030e+02, 7.4758819861e+02,
    7.4867506820e+02, 7.4976186921e+02, 7.5084860182e+02, 7.5193526618e+02,
    7.5302186246e+02, 7.5410839082e+02, 7.5519485141e+02, 7.5628124439e+02,
    7.5736756993e+02, 7.5845382818e+02, 7.5954001930e+02, 7.6062614344e+02,
    7.6171220076e+02, 7.6279819142e+02, 7.6388411557e+02, 7.6496997336e+02,
    7.6605576495e+02, 7.6714149049e+02, 7.6822715013e+02, 7.6931274403e+02,
    7.7039827234e+02, 7.7148373520e+02, 7.7256913277e+02, 7.7365446519e+02,
    7.7473973262e+02, 7.7582493520e+02, 7.7691007308e+02, 7.7799514641e+02,
    7.7908015534e+02, 7.8016510000e+02, 7.8124998056e+02, 7.8233479714e+02,
    7.8341954990e+02, 7.8450423898e+02, 7.8558886452e+02, 7.8667342667e+02,
    7.8775792556e+02, 7.8884236135e+02, 7.8992673416e+02, 7.9101104415e+02,
    7.9209529145e+02, 7.9317947620e+02, 7.9426359854e+02, 7.9534765861e+02,
    7.9643165654e+02, 7.9751559248e+02, 7.9859946657e+02, 7.9968327893e+02,
    8.0076702970e+02, 8.0185071903e+02, 8.0293434704e+02, 8.0401791387e+02,
    8.0510141965e+02, 8.0618486452e+02, 8.0726824861e+02, 8.0835157206e+02,
    8.0943483499e+02, 8.1051803753e+02, 8.1160117983e+02, 8.1268426200e+02,
    8.1376728418e+02, 8.1485024650e+02, 8.1593314909e+02, 8.1701599207e+02,
    8.1809877558e+02, 8.1918149975e+02, 8.2026416469e+02, 8.2134677054e+02,
    8.2242931743e+02, 8.2351180547e+02, 8.2459423481e+02, 8.2567660555e+02,
    8.2675891783e+02, 8.2784117177e+02, 8.2892336749e+02, 8.3000550512e+02,
    8.3108758478e+02, 8.3216960659e+02, 8.3325157068e+02, 8.3433347717e+02,
    8.3541532617e+02, 8.3649711782e+02, 8.3757885222e+02, 8.3866052950e+02,
    8.3974214978e+02, 8.4082371318e+02, 8.4190521982e+02, 8.4298666981e+02,
    8.4406806327e+02, 8.4514940033e+02, 8.4623068109e+02, 8.4731190568e+02,
    8.4839307421e+02, 8.4947418680e+02, 8.5055524355e+02, 8.5163624460e+02,
    8.5271719005e+02, 8.5379808001e+02, 8.5487891461e+02, 8.5595969395e+02,
    8.5704041815e+02, 8.5812108731e+02, 8.5920170156e+02, 8.6028226101e+02,
    8.6136276576e+02, 8.6244321592e+02, 8.6352361162e+02, 8.6460395295e+02,
    8.6568424003e+02, 8.6676447298e+02, 8.6784465188e+02, 8.6892477687e+02,
    8.7000484804e+02, 8.7108486551e+02, 8.7216482938e+02, 8.7324473975e+02,
    8.7432459675e+02, 8.7540440046e+02, 8.7648415101e+02, 8.7756384849e+02,
    8.7864349302e+02, 8.7972308469e+02, 8.8080262361e+02, 8.8188210990e+02,
    8.8296154364e+02, 8.8404092495e+02, 8.8512025393e+02, 8.8619953068e+02,
    8.8727875530e+02, 8.8835792791e+02, 8.8943704859e+02, 8.9051611746e+02,
    8.9159513461e+02, 8.9267410015e+02, 8.9375301417e+02, 8.9483187679e+02,
    8.9591068809e+02, 8.9698944817e+02, 8.9806815715e+02, 8.9914681511e+02,
    9.0022542216e+02, 9.0130397839e+02, 9.0238248391e+02, 9.0346093880e+02,
    9.0453934318e+02, 9.0561769713e+02, 9.0669600076e+02, 9.0777425416e+02,
    9.0885245742e+02, 9.0993061065e+02, 9.1100871393e+02, 9.1208676737e+02,
    9.1316477107e+02, 9.1424272510e+02, 9.1532062958e+02, 9.1639848459e+02,
    9.1747629023e+02, 9.1855404659e+02, 9.1963175377e+02, 9.2070941185e+02,
    9.2178702094e+02, 9.2286458112e+02, 9.2394209249e+02, 9.2501955514e+02,
    9.2609696915e+02, 9.2717433464e+02, 9.2825165167e+02, 9.2932892035e+02,
    9.3040614076e+02, 9.3148331300e+02, 9.3256043715e+02, 9.3363751331e+02,
    9.3471454156e+02, 9.3579152200e+02, 9.3686845470e+02, 9.3794533977e+02,
    9.3902217729e+02, 9.4009896735e+02, 9.4117571003e+02, 9.4225240543e+02,
    9.4332905363e+02, 9.4440565471e+02, 9.4548220877e+02, 9.4655871589e+02,
    9.4763517616e+02, 9.4871158966e+02, 9.4978795647e+02, 9.5086427670e+02,
    9.5194055041e+02, 9.5301677770e+02, 9.5409295864e+02, 9.5516909333e+02,
    9.5624518185e+02, 9.5732122427e+02, 9.5839722070e+02, 9.5947317120e+02,
    9.6054907586e+02, 9.6162493477e+02, 9.6270074800e+02, 9.6377651565e+02,
    9.6485223778e+02, 9.6592791449e+02, 9.6700354586e+02, 9.6807913196e+02,
    9.6915467288e+02, 9.7023016870e+02, 9.7130561950e+02, 9.7238102536e+02,
    9.7345638636e+02, 9.7453170257e+02, 9.7560697409e+02, 9.7668220099e+02,
    9.7775738335e+02, 9.7883252124e+02, 9.7990761475e+02, 9.8098266396e+02,
    9.8205766894e+02, 9.8313262977e+02, 9.8420754653e+02, 9.8528241929e+02,
    9.8635724815e+02, 9.8743203316e+02, 9.8850677441e+02, 9.8958147198e+02,
    9.9065612594e+02, 9.9173073636e+02, 9.9280530333e+02, 9.9387982692e+02,
    9.9495430721e+02, 9.9602874427e+02, 9.9710313817e+02, 9.9817748899e+02,
    9.9925179682e+02, 1.0003260617e+03, 1.0014002837e+03, 1.0024744630e+03,
    1.0035485995e+03, 1.0046226935e+03, 1.0056967448e+03, 1.0067707537e+03,
    1.0078447201e+03, 1.0089186442e+03, 1.0099925261e+03, 1.0110663657e+03,
    1.0121401633e+03, 1.0132139187e+03, 1.0142876322e+03, 1.0153613038e+03,
    1.0164349336e+03, 1.0175085215e+03, 1.0185820678e+03, 1.0196555725e+03,
    1.0207290356e+03, 1.0218024572e+03, 1.0228758374e+03, 1.0239491763e+03,
    1.0250224739e+03, 1.0260957303e+03, 1.0271689456e+03, 1.0282421198e+03,
    1.0293152530e+03, 1.0303883452e+03, 1.0314613967e+03, 1.0325344073e+03,
    1.0336073772e+03, 1.0346803064e+03, 1.0357531951e+03, 1.0368260433e+03,
    1.0378988510e+03, 1.0389716183e+03, 1.0400443453e+03, 1.0411170320e+03,
    1.0421896786e+03, 1.0432622850e+03, 1.0443348514e+03, 1.0454073779e+03,
    1.0464798644e+03, 1.0475523110e+03, 1.0486247179e+03, 1.0496970850e+03,
    1.0507694125e+03, 1.0518417004e+03, 1.0529139488e+03, 1.0539861577e+03,
    1.0550583272e+03, 1.0561304574e+03, 1.0572025484e+03, 1.0582746001e+03,
    1.0593466127e+03, 1.0604185862e+03, 1.0614905207e+03, 1.0625624162e+03,
    1.0636342729e+03, 1.0647060907e+03, 1.0657778698e+03, 1.0668496102e+03,
    1.0679213119e+03, 1.0689929751e+03, 1.0700645998e+03, 1.0711361860e+03,
    1.0722077338e+03, 1.0732792434e+03, 1.0743507146e+03, 1.0754221477e+03,
    1.0764935426e+03, 1.0775648994e+03, 1.0786362182e+03, 1.0797074991e+03,
    1.0807787420e+03, 1.0818499472e+03, 1.0829211145e+03, 1.0839922441e+03,
    1.0850633361e+03, 1.0861343905e+03, 1.0872054073e+03, 1.0882763867e+03,
    1.0893473287e+03, 1.0904182332e+03, 1.0914891005e+03, 1.0925599306e+03,
    1.0936307234e+03, 1.0947014792e+03, 1.0957721979e+03, 1.0968428795e+03,
    1.0979135243e+03, 1.0989841321e+03, 1.1000547031e+03, 1.1011252373e+03,
    1.1021957348e+03, 1.1032661956e+03, 1.1043366199e+03, 1.1054070075e+03,
    1.1064773587e+03, 1.1075476735e+03, 1.1086179519e+03, 1.1096881940e+03,
    1.1107583998e+03, 1.1118285693e+03, 1.1128987028e+03, 1.1139688001e+03,
    1.1150388614e+03, 1.1161088867e+03, 1.1171788761e+03, 1.1182488296e+03,
    1.1193187473e+03, 1.1203886292e+03, 1.1214584755e+03, 1.1225282860e+03,
    1.1235980610e+03, 1.1246678004e+03, 1.1257375043e+03, 1.1268071728e+03,
    1.1278768059e+03, 1.1289464037e+03, 1.1300159662e+03, 1.1310854934e+03,
    1.1321549855e+03, 1.1332244425e+03, 1.1342938644e+03, 1.1353632513e+03,
    1.1364326033e+03, 1.1375019204e+03, 1.1385712026e+03, 1.1396404500e+03,
    1.1407096626e+03, 1.1417788406e+03, 1.1428479839e+03, 1.1439170926e+03,
    1.1449861668e+03, 1.1460552065e+03, 1.1471242118e+03, 1.1481931827e+03,
    1.1492621192e+03, 1.1503310215e+03, 1.1513998895e+03, 1.1524687234e+03,
    1.1535375231e+03, 1.1546062888e+03, 1.1556750204e+03, 1.1567437181e+03,
    1.1578123818e+03, 1.1588810117e+03, 1.1599496077e+03, 1.1610181700e+03,
    1.1620866985e+03, 1.1631551933e+03, 1.1642236546e+03, 1.1652920822e+03,
    1.1663604763e+03, 1.1674288370e+03, 1.1684971642e+03, 1.1695654580e+03,
    1.1706337185e+03, 1.1717019457e+03, 1.1727701397e+03, 1.1738383005e+03,
    1.1749064282e+03, 1.1759745228e+03, 1.1770425843e+03, 1.1781106128e+03,
    1.1791786084e+03, 1.1802465711e+03, 1.1813145010e+03, 1.1823823980e+03,
    1.1834502623e+03, 1.1845180939e+03, 1.1855858928e+03, 1.1866536591e+03,
    1.1877213929e+03, 1.1887890941e+03, 1.1898567629e+03, 1.1909243992e+03,
    1.1919920032e+03, 1.1930595748e+03, 1.1941271141e+03, 1.1951946212e+03,
    1.1962620962e+03, 1.1973295389e+03, 1.1983969496e+03, 1.1994643282e+03,
    1.2005316748e+03, 1.2015989894e+03, 1.2026662721e+03, 1.2037335229e+03,
    1.2048007420e+03, 1.2058679292e+03, 1.2069350847e+03, 1.2080022085e+03,
    1.2090693006e+03, 1.2101363612e+03, 1.2112033901e+03, 1.2122703876e+03,
    1.2133373536e+03, 1.2144042882e+03, 1.2154711914e+03, 1.2165380632e+03,
    1.2176049038e+03, 1.2186717131e+03, 1.2197384912e+03, 1.2208052382e+03,
    1.2218719540e+03, 1.2229386387e+03, 1.2240052925e+03, 1.2250719152e+03,
    1.2261385070e+03, 1.2272050679e+03, 1.2282715979e+03, 1.2293380971e+03,
    1.2304045655e+03, 1.2314710033e+03, 1.2325374103e+03, 1.2336037866e+03,
    1.2346701324e+03, 1.2357364476e+03, 1.2368027323e+03, 1.2378689865e+03,
    1.2389352103e+03, 1.2400014037e+03, 1.2410675667e+03, 1.2421336995e+03,
    1.2431998019e+03, 1.2442658742e+03, 1.2453319162e+03, 1.2463979281e+03,
    1.2474639099e+03, 1.2485298617e+03, 1.2495957834e+03, 1.2506616751e+03,
};

inline constexpr std::size_t kChiSquareQuantileCount =
    sizeof(kChiSquareQuantile1e3) / sizeof(double);

// Wilson-Hilferty approximation, used beyond the embedded table.
inline double chi_square_quantile_wh(double dof) {
  const double z = 3.0902323061678132;  // upper 1e-3 normal quantile
  const double a = 2.0 / (9.0 * dof);
  const double t = 1.0 - a + z * std::sqrt(a);
  return dof * t * t * t;
}

}  // namespace aldr::detail
